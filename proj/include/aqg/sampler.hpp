#pragma once

#include "aqg/field.hpp"

namespace aqg {

enum class Normalization { unit_l2, unit_h2 };

/// Seeded band-limited random fields: complex Gaussian coefficients on
/// |signed index| <= kmax in both directions, Hermitian-symmetrized, zero
/// mean, rescaled per policy. Identical (seed, sample index) gives an
/// identical field.
struct FieldSampler {
    GridPtr grid;
    int kmax = 0;
    long seed = 0;
    Normalization normalization = Normalization::unit_l2;
};

void validate(const FieldSampler& sampler);

SpectralField sample_field(const FieldSampler& sampler, long sample_index = 0);

/// theta0 = cos(x1), constructed spectrally.
SpectralField initial_cos_x1(GridPtr grid);

/// theta0 = sin(x1) sin(x2) + cos(x2), a standard smooth benchmark shape.
SpectralField initial_benchmark(GridPtr grid);

/// Low-regularity profile: Gaussian coefficients shaped by |xi|^-(1+s_profile)
/// over the full dealiased band, unit L2 norm. Lies in H^sigma for
/// sigma < s_profile at the continuum level.
SpectralField initial_rough(GridPtr grid, double s_profile, long seed);

}  // namespace aqg
