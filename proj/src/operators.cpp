#include "aqg/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace aqg {

namespace {

void check_axis(int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
}

}  // namespace

SpectralField directional_fractional(const SpectralField& F, int axis, double power) {
    check_axis(axis);
    if (!(power >= 0.0) || !std::isfinite(power))
        throw std::invalid_argument("directional_fractional: power must be finite and >= 0");
    const Grid& g = *F.grid;
    SpectralField out = F;
    if (power == 0.0) return out;
    if (axis == 1) {
        for (int i1 = 0; i1 < g.n1; ++i1) {
            const double m = std::pow(std::abs(g.k1[i1]), power);
            for (int i2 = 0; i2 < g.n2; ++i2) out.coeffs[g.index(i1, i2)] *= m;
        }
    } else {
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double m = std::pow(std::abs(g.k2[i2]), power);
            for (int i1 = 0; i1 < g.n1; ++i1) out.coeffs[g.index(i1, i2)] *= m;
        }
    }
    return out;
}

SpectralField isotropic_fractional(const SpectralField& F, double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("isotropic_fractional: sigma must be finite and >= 0");
    const Grid& g = *F.grid;
    SpectralField out = F;
    if (sigma == 0.0) return out;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double k1sq = g.k1[i1] * g.k1[i1];
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double ksq = k1sq + g.k2[i2] * g.k2[i2];
            out.coeffs[g.index(i1, i2)] *= std::pow(ksq, 0.5 * sigma);
        }
    }
    return out;
}

std::pair<SpectralField, SpectralField> riesz_velocity(const SpectralField& theta) {
    const Grid& g = *theta.grid;
    SpectralField u1 = zero_spectral(theta.grid);
    SpectralField u2 = zero_spectral(theta.grid);
    for (int i1 = 0; i1 < g.n1; ++i1) {
        for (int i2 = 0; i2 < g.n2; ++i2) {
            if ((i1 == 0 && i2 == 0) || g.is_nyquist1(i1) || g.is_nyquist2(i2)) continue;
            const double a = g.k1[i1];
            const double b = g.k2[i2];
            const double inv_norm = 1.0 / std::sqrt(a * a + b * b);
            const std::complex<double> t = theta.coeffs[g.index(i1, i2)] * inv_norm;
            // u1_hat = -i*xi2/|xi| theta_hat, u2_hat = i*xi1/|xi| theta_hat
            u1.coeffs[g.index(i1, i2)] = std::complex<double>(b * t.imag(), -b * t.real());
            u2.coeffs[g.index(i1, i2)] = std::complex<double>(-a * t.imag(), a * t.real());
        }
    }
    return {std::move(u1), std::move(u2)};
}

SpectralField dealias(const SpectralField& F) {
    const Grid& g = *F.grid;
    SpectralField out = F;
    const double c1 = g.n1 / 3.0;
    const double c2 = g.n2 / 3.0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const bool kill1 = std::abs(g.signed_index1(i1)) > c1;
        for (int i2 = 0; i2 < g.n2; ++i2) {
            if (kill1 || std::abs(g.signed_index2(i2)) > c2)
                out.coeffs[g.index(i1, i2)] = 0.0;
        }
    }
    return out;
}

SpectralField derivative(const SpectralField& F, int axis) {
    check_axis(axis);
    const Grid& g = *F.grid;
    SpectralField out = zero_spectral(F.grid);
    for (int i1 = 0; i1 < g.n1; ++i1) {
        for (int i2 = 0; i2 < g.n2; ++i2) {
            if (g.is_nyquist1(i1) || g.is_nyquist2(i2)) continue;
            const double k = axis == 1 ? g.k1[i1] : g.k2[i2];
            const std::complex<double> c = F.coeffs[g.index(i1, i2)];
            out.coeffs[g.index(i1, i2)] = std::complex<double>(-k * c.imag(), k * c.real());
        }
    }
    return out;
}

SpectralField advection_term(const SpectralField& theta) {
    const SpectralField band = dealias(theta);
    auto [u1h, u2h] = riesz_velocity(band);
    const PhysicalField u1 = to_physical(u1h);
    const PhysicalField u2 = to_physical(u2h);
    const PhysicalField g1 = to_physical(derivative(band, 1));
    const PhysicalField g2 = to_physical(derivative(band, 2));
    PhysicalField prod = zero_physical(theta.grid);
    const int n = theta.grid->size();
    for (int i = 0; i < n; ++i)
        prod.values[i] = u1.values[i] * g1.values[i] + u2.values[i] * g2.values[i];
    return dealias(to_spectral(prod));
}

}  // namespace aqg
