#pragma once

namespace aqg {

/// Dissipation parameters of the transport equation
///   d/dt theta + u.grad(theta) + mu |d1|^(2 alpha) theta + nu |d2|^(2 beta) theta = 0.
/// alpha, beta in (0,1). mu = nu = 0 is accepted as an inviscid diagnostic
/// mode; the physical setting has mu, nu > 0.
struct AnisotropyParams {
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
};

/// Throws std::invalid_argument on out-of-range parameters.
void validate(const AnisotropyParams& p);

}  // namespace aqg
