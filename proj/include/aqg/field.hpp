#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "aqg/grid.hpp"

namespace aqg {

/// Real point values on the grid, row-major with x2 fastest.
struct PhysicalField {
    GridPtr grid;
    std::vector<double> values;

    PhysicalField() = default;
    PhysicalField(GridPtr g, std::vector<double> v);

    double& at(int i1, int i2) { return values[grid->index(i1, i2)]; }
    double at(int i1, int i2) const { return values[grid->index(i1, i2)]; }
};

/// Fourier coefficients, full n1 x n2 complex table in FFT ordering.
/// Convention: forward transform is the plain unnormalized DFT sum, the
/// inverse divides by n1*n2. A real field has Hermitian-symmetric
/// coefficients, coeff(-xi) = conj(coeff(xi)).
struct SpectralField {
    GridPtr grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    SpectralField(GridPtr g, std::vector<std::complex<double>> c);

    std::complex<double>& at(int i1, int i2) { return coeffs[grid->index(i1, i2)]; }
    std::complex<double> at(int i1, int i2) const { return coeffs[grid->index(i1, i2)]; }
};

/// All-zero fields.
PhysicalField zero_physical(GridPtr grid);
SpectralField zero_spectral(GridPtr grid);

SpectralField to_spectral(const PhysicalField& f);
PhysicalField to_physical(const SpectralField& F);

/// Builds the real field (1/N) * sum over listed modes of amp*exp(i k.x),
/// inserting the conjugate mode for each entry. Signed indices.
SpectralField spectral_from_modes(
    GridPtr grid, const std::vector<std::tuple<int, int, std::complex<double>>>& modes);

bool all_finite(const SpectralField& F);

}  // namespace aqg
