#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqg/diagnostics.hpp"
#include "aqg/field.hpp"
#include "aqg/params.hpp"

namespace aqg {

struct DtPolicy {
    enum class Kind { fixed, cfl };
    Kind kind = Kind::fixed;
    double dt = 0.0;      // fixed step
    double c_cfl = 0.5;   // cfl: dt = min(dt_max, c * min(dx) / max |u|)
    double dt_max = 0.0;

    static DtPolicy fixed(double dt) { return {Kind::fixed, dt, 0.0, 0.0}; }
    static DtPolicy cfl(double c, double dt_max) { return {Kind::cfl, 0.0, c, dt_max}; }
};

struct SolverConfig {
    AnisotropyParams params;
    double t_end = 0.0;
    DtPolicy dt_policy;
    int diag_stride = 1;
    long seed = 0;
    double s = 2.0;          // Sobolev index monitored in the report
    int capture_stride = 0;  // keep every k-th sampled state (0 = none)
};

void validate(const SolverConfig& config);

/// Per-mode decay factors exp(-(mu |xi1|^(2 alpha) + nu |xi2|^(2 beta)) dt).
struct LinearPropagator {
    GridPtr grid;
    double dt = 0.0;
    std::vector<double> factors;
};

LinearPropagator build_propagator(GridPtr grid, const AnisotropyParams& params, double dt);

/// -u.grad(theta), Galerkin-truncated.
SpectralField rhs_nonlinear(const SpectralField& theta);

/// One integrating-factor RK4 step of d/dt theta = -u.grad(theta) - L theta.
/// The diagonal linear part is treated exactly, so pure-decay states advance
/// by the exact exponential; otherwise the step is classically 4th order.
SpectralField step_ifrk4(const SpectralField& theta, double dt, const AnisotropyParams& params);

double adapt_dt(const PhysicalField& u1, const PhysicalField& u2, const DtPolicy& policy);

struct StateSample {
    double t = 0.0;
    SpectralField field;
};

struct Trajectory {
    std::vector<double> times;          // sampled times, matching report rows
    std::vector<StateSample> snapshots; // sparse, by capture_stride
    NormReport report;
    SpectralField final_state;
    double final_time = 0.0;
    bool aborted = false;
    double abort_time = 0.0;
    std::string abort_reason;
};

/// Integrates theta0 to t_end, sampling the report every diag_stride steps
/// (plus the final state). A non-finite state or an H1 norm above 1e6 times
/// its initial value aborts the run with a flagged record instead of
/// throwing. Deterministic for fixed inputs.
Trajectory run(const SpectralField& theta0, const SolverConfig& config);

}  // namespace aqg
