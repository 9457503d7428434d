#include "aqg/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "aqg/diagnostics.hpp"

namespace aqg {

namespace {

std::mt19937_64 engine_for(long seed, long sample_index) {
    std::seed_seq seq{static_cast<unsigned long long>(seed),
                      static_cast<unsigned long long>(sample_index),
                      0x9e3779b97f4a7c15ull};
    return std::mt19937_64(seq);
}

// Fills Hermitian pairs over the half-space (j1 > 0) or (j1 == 0, j2 > 0),
// drawing coefficients from `draw`.
template <typename Draw>
SpectralField hermitian_random(GridPtr grid, int kmax, Draw&& draw) {
    SpectralField F = zero_spectral(grid);
    const Grid& g = *grid;
    for (int j1 = 0; j1 <= kmax; ++j1) {
        for (int j2 = -kmax; j2 <= kmax; ++j2) {
            if (j1 == 0 && j2 <= 0) continue;
            const std::complex<double> c = draw(j1, j2);
            const int i1 = j1;
            const int i2 = j2 >= 0 ? j2 : j2 + g.n2;
            const int c1 = j1 == 0 ? 0 : g.n1 - j1;
            const int c2 = j2 <= 0 ? -j2 : g.n2 - j2;
            F.coeffs[g.index(i1, i2)] = c;
            F.coeffs[g.index(c1, c2)] = std::conj(c);
        }
    }
    return F;
}

void normalize(SpectralField& F, Normalization policy) {
    const double norm = policy == Normalization::unit_l2 ? sobolev_norm(F, 0.0, false)
                                                         : sobolev_norm(F, 2.0, false);
    if (norm == 0.0) throw std::runtime_error("sample_field: degenerate zero sample");
    const double scale = 1.0 / norm;
    for (auto& c : F.coeffs) c *= scale;
}

}  // namespace

void validate(const FieldSampler& sampler) {
    if (!sampler.grid) throw std::invalid_argument("FieldSampler: null grid");
    const int limit = std::min(sampler.grid->n1, sampler.grid->n2) / 3;
    if (sampler.kmax < 1 || sampler.kmax > limit)
        throw std::invalid_argument("FieldSampler: kmax must lie in [1, min(n1,n2)/3]");
}

SpectralField sample_field(const FieldSampler& sampler, long sample_index) {
    validate(sampler);
    auto rng = engine_for(sampler.seed, sample_index);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField F = hermitian_random(sampler.grid, sampler.kmax, [&](int, int) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        return std::complex<double>(re, im);
    });
    normalize(F, sampler.normalization);
    return F;
}

SpectralField initial_cos_x1(GridPtr grid) {
    return spectral_from_modes(grid, {{1, 0, {0.5, 0.0}}});
}

SpectralField initial_benchmark(GridPtr grid) {
    // sin x1 sin x2 = -1/4 e^{i(x1+x2)} + 1/4 e^{i(x1-x2)} + c.c.
    return spectral_from_modes(grid, {{1, 1, {-0.25, 0.0}},
                                      {1, -1, {0.25, 0.0}},
                                      {0, 1, {0.5, 0.0}}});
}

SpectralField initial_rough(GridPtr grid, double s_profile, long seed) {
    if (!(s_profile > 0.0) || !std::isfinite(s_profile))
        throw std::invalid_argument("initial_rough: profile index must be > 0");
    const int kmax = std::min(grid->n1, grid->n2) / 3;
    auto rng = engine_for(seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scale1 = 2.0 * std::numbers::pi / grid->l1;
    const double scale2 = 2.0 * std::numbers::pi / grid->l2;
    SpectralField F = hermitian_random(grid, kmax, [&](int j1, int j2) {
        const double k1 = scale1 * j1;
        const double k2 = scale2 * j2;
        const double shape = std::pow(k1 * k1 + k2 * k2, -0.5 * (1.0 + s_profile));
        return std::complex<double>(gauss(rng) * shape, gauss(rng) * shape);
    });
    normalize(F, Normalization::unit_l2);
    return F;
}

}  // namespace aqg
