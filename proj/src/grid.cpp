#include "aqg/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aqg {

namespace {

std::vector<double> wavenumbers(int n, double period) {
    std::vector<double> k(n);
    const double scale = 2.0 * std::numbers::pi / period;
    for (int i = 0; i < n; ++i) {
        const int j = i < n / 2 ? i : i - n;
        k[i] = scale * j;
    }
    return k;
}

}  // namespace

GridPtr make_grid(int n1, int n2, double l1, double l2) {
    if (n1 < 8 || n2 < 8)
        throw std::invalid_argument("make_grid: sizes must be >= 8, got " + std::to_string(n1) +
                                    "x" + std::to_string(n2));
    if (n1 % 2 != 0 || n2 % 2 != 0)
        throw std::invalid_argument("make_grid: sizes must be even, got " + std::to_string(n1) +
                                    "x" + std::to_string(n2));
    if (!(l1 > 0.0) || !(l2 > 0.0) || !std::isfinite(l1) || !std::isfinite(l2))
        throw std::invalid_argument("make_grid: periods must be positive and finite");

    auto g = std::make_shared<Grid>();
    g->n1 = n1;
    g->n2 = n2;
    g->l1 = l1;
    g->l2 = l2;
    g->k1 = wavenumbers(n1, l1);
    g->k2 = wavenumbers(n2, l2);
    return g;
}

}  // namespace aqg
