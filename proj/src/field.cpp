#include "aqg/field.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace aqg {

namespace {

// Process-wide plan cache keyed by (n1, n2). Planner calls are serialized;
// executing a cached plan on fresh arrays is safe from any thread.
class PlanCache {
  public:
    struct Plans {
        fftw_plan forward = nullptr;
        fftw_plan backward = nullptr;
    };

    static const Plans& get(int n1, int n2) {
        static PlanCache cache;
        std::lock_guard<std::mutex> lock(cache.mutex_);
        auto key = std::make_pair(n1, n2);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;

        std::vector<std::complex<double>> a(static_cast<size_t>(n1) * n2);
        std::vector<std::complex<double>> b(a.size());
        auto* pa = reinterpret_cast<fftw_complex*>(a.data());
        auto* pb = reinterpret_cast<fftw_complex*>(b.data());
        Plans p;
        p.forward = fftw_plan_dft_2d(n1, n2, pa, pb, FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.backward = fftw_plan_dft_2d(n1, n2, pa, pb, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p.forward || !p.backward) throw std::runtime_error("fftw planning failed");
        return cache.plans_.emplace(key, p).first->second;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::pair<int, int>, Plans> plans_;
};

void check_grid(const GridPtr& g) {
    if (!g) throw std::invalid_argument("field: null grid");
}

}  // namespace

PhysicalField::PhysicalField(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    check_grid(grid);
    if (static_cast<int>(values.size()) != grid->size())
        throw std::invalid_argument("PhysicalField: value table does not match grid");
}

SpectralField::SpectralField(GridPtr g, std::vector<std::complex<double>> c)
    : grid(std::move(g)), coeffs(std::move(c)) {
    check_grid(grid);
    if (static_cast<int>(coeffs.size()) != grid->size())
        throw std::invalid_argument("SpectralField: coefficient table does not match grid");
}

PhysicalField zero_physical(GridPtr grid) {
    check_grid(grid);
    return PhysicalField(grid, std::vector<double>(grid->size(), 0.0));
}

SpectralField zero_spectral(GridPtr grid) {
    check_grid(grid);
    return SpectralField(grid, std::vector<std::complex<double>>(grid->size()));
}

SpectralField to_spectral(const PhysicalField& f) {
    check_grid(f.grid);
    const auto& plans = PlanCache::get(f.grid->n1, f.grid->n2);
    std::vector<std::complex<double>> in(f.values.begin(), f.values.end());
    std::vector<std::complex<double>> out(in.size());
    fftw_execute_dft(plans.forward, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return SpectralField(f.grid, std::move(out));
}

PhysicalField to_physical(const SpectralField& F) {
    check_grid(F.grid);
    const auto& plans = PlanCache::get(F.grid->n1, F.grid->n2);
    std::vector<std::complex<double>> in(F.coeffs);
    std::vector<std::complex<double>> out(in.size());
    fftw_execute_dft(plans.backward, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    const double inv_n = 1.0 / F.grid->size();
    std::vector<double> values(out.size());
    for (size_t i = 0; i < out.size(); ++i) values[i] = out[i].real() * inv_n;
    return PhysicalField(F.grid, std::move(values));
}

SpectralField spectral_from_modes(
    GridPtr grid, const std::vector<std::tuple<int, int, std::complex<double>>>& modes) {
    check_grid(grid);
    auto F = zero_spectral(grid);
    const double n = grid->size();
    for (const auto& [j1, j2, amp] : modes) {
        if (std::abs(j1) >= grid->n1 / 2 || std::abs(j2) >= grid->n2 / 2)
            throw std::invalid_argument("spectral_from_modes: mode outside representable band");
        const int i1 = j1 >= 0 ? j1 : j1 + grid->n1;
        const int i2 = j2 >= 0 ? j2 : j2 + grid->n2;
        const int c1 = j1 <= 0 ? -j1 : grid->n1 - j1;
        const int c2 = j2 <= 0 ? -j2 : grid->n2 - j2;
        F.at(i1, i2) += n * amp;
        if (c1 != i1 || c2 != i2) F.coeffs[grid->index(c1, c2)] += n * std::conj(amp);
    }
    return F;
}

bool all_finite(const SpectralField& F) {
    double acc = 0.0;
    for (const auto& c : F.coeffs) acc += std::abs(c.real()) + std::abs(c.imag());
    return std::isfinite(acc);
}

}  // namespace aqg
