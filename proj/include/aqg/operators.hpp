#pragma once

#include <utility>

#include "aqg/field.hpp"

namespace aqg {

/// Multiplies coefficients by |xi_axis|^power. axis is 1 or 2, power >= 0.
/// Modes with xi_axis = 0 are annihilated for power > 0 and untouched for
/// power = 0.
SpectralField directional_fractional(const SpectralField& F, int axis, double power);

/// Multiplies coefficients by |xi|^sigma = (xi1^2 + xi2^2)^(sigma/2), sigma >= 0.
SpectralField isotropic_fractional(const SpectralField& F, double sigma);

/// Velocity recovered from the scalar: u = (-R2 theta, R1 theta) with
/// Riesz symbols i*xi_j/|xi|. Zero mode and Nyquist rows map to zero so the
/// velocity stays real and mean-free. Divergence vanishes mode by mode.
std::pair<SpectralField, SpectralField> riesz_velocity(const SpectralField& theta);

/// 2/3-rule truncation: zeroes modes with |signed index| > n/3 in either
/// direction. Idempotent projection.
SpectralField dealias(const SpectralField& F);

/// Spectral derivative i*xi_axis (Nyquist zeroed).
SpectralField derivative(const SpectralField& F, int axis);

/// Galerkin-truncated advection u.grad(theta): velocity and gradient are
/// dealiased, multiplied pointwise in physical space, and the product is
/// dealiased again.
SpectralField advection_term(const SpectralField& theta);

}  // namespace aqg
