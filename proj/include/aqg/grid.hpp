#pragma once

#include <memory>
#include <vector>

namespace aqg {

/// Periodic box discretization. Wavenumbers follow FFT ordering
/// (0, 1, ..., n/2-1, -n/2, ..., -1) scaled by 2*pi/period.
struct Grid {
    int n1 = 0;
    int n2 = 0;
    double l1 = 0.0;
    double l2 = 0.0;
    std::vector<double> k1;  // size n1
    std::vector<double> k2;  // size n2

    int size() const { return n1 * n2; }
    // Row-major, x2 fastest.
    int index(int i1, int i2) const { return i1 * n2 + i2; }

    int signed_index1(int i1) const { return i1 < n1 / 2 ? i1 : i1 - n1; }
    int signed_index2(int i2) const { return i2 < n2 / 2 ? i2 : i2 - n2; }
    bool is_nyquist1(int i1) const { return i1 == n1 / 2; }
    bool is_nyquist2(int i2) const { return i2 == n2 / 2; }

    double x1(int i1) const { return l1 * static_cast<double>(i1) / n1; }
    double x2(int i2) const { return l2 * static_cast<double>(i2) / n2; }

    double dx1() const { return l1 / n1; }
    double dx2() const { return l2 / n2; }

    bool same_box(const Grid& other) const {
        return n1 == other.n1 && n2 == other.n2 && l1 == other.l1 && l2 == other.l2;
    }
};

using GridPtr = std::shared_ptr<const Grid>;

/// Builds the wavenumber tables for an n1 x n2 box of periods l1, l2.
/// Sizes must be even and >= 8, periods positive.
GridPtr make_grid(int n1, int n2, double l1, double l2);

}  // namespace aqg
