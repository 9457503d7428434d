#include "aqg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aqg/operators.hpp"

namespace aqg {

namespace {

// mu |xi1|^(2 alpha) + nu |xi2|^(2 beta), the pow-heavy part of the
// propagator, built once per run.
std::vector<double> dissipation_symbol(const Grid& g, const AnisotropyParams& p) {
    std::vector<double> m1(g.n1), m2(g.n2);
    for (int i1 = 0; i1 < g.n1; ++i1) m1[i1] = p.mu * std::pow(std::abs(g.k1[i1]), 2.0 * p.alpha);
    for (int i2 = 0; i2 < g.n2; ++i2) m2[i2] = p.nu * std::pow(std::abs(g.k2[i2]), 2.0 * p.beta);
    std::vector<double> sym(g.size());
    for (int i1 = 0; i1 < g.n1; ++i1)
        for (int i2 = 0; i2 < g.n2; ++i2) sym[g.index(i1, i2)] = m1[i1] + m2[i2];
    return sym;
}

std::vector<double> exp_factors(const std::vector<double>& symbol, double dt) {
    std::vector<double> f(symbol.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] = std::exp(-symbol[i] * dt);
    return f;
}

void scale_inplace(SpectralField& F, const std::vector<double>& factors) {
    for (size_t i = 0; i < F.coeffs.size(); ++i) F.coeffs[i] *= factors[i];
}

// IFRK4 stage arithmetic with half-step factors e and full-step factors e2.
SpectralField ifrk4_step(const SpectralField& theta, double dt, const std::vector<double>& e,
                         const std::vector<double>& e2) {
    const size_t n = theta.coeffs.size();
    const SpectralField k1 = rhs_nonlinear(theta);

    SpectralField stage = theta;
    for (size_t i = 0; i < n; ++i)
        stage.coeffs[i] = (theta.coeffs[i] + 0.5 * dt * k1.coeffs[i]) * e[i];
    const SpectralField k2 = rhs_nonlinear(stage);

    for (size_t i = 0; i < n; ++i)
        stage.coeffs[i] = theta.coeffs[i] * e[i] + 0.5 * dt * k2.coeffs[i];
    const SpectralField k3 = rhs_nonlinear(stage);

    for (size_t i = 0; i < n; ++i)
        stage.coeffs[i] = theta.coeffs[i] * e2[i] + dt * e[i] * k3.coeffs[i];
    const SpectralField k4 = rhs_nonlinear(stage);

    SpectralField next = theta;
    for (size_t i = 0; i < n; ++i) {
        const auto weighted = e2[i] * k1.coeffs[i] + 2.0 * e[i] * (k2.coeffs[i] + k3.coeffs[i]) +
                              k4.coeffs[i];
        next.coeffs[i] = theta.coeffs[i] * e2[i] + (dt / 6.0) * weighted;
    }
    return next;
}

double h1_norm(const NormRow& row) { return std::sqrt(row.l2 * row.l2 + row.hdot1 * row.hdot1); }

}  // namespace

void validate(const SolverConfig& config) {
    validate(config.params);
    if (!(config.t_end >= 0.0) || !std::isfinite(config.t_end))
        throw std::invalid_argument("t_end must be finite and >= 0");
    if (config.diag_stride < 1) throw std::invalid_argument("diag_stride must be >= 1");
    if (config.capture_stride < 0) throw std::invalid_argument("capture_stride must be >= 0");
    if (!std::isfinite(config.s)) throw std::invalid_argument("s must be finite");
    switch (config.dt_policy.kind) {
        case DtPolicy::Kind::fixed:
            if (!(config.dt_policy.dt > 0.0)) throw std::invalid_argument("fixed dt must be > 0");
            break;
        case DtPolicy::Kind::cfl:
            if (!(config.dt_policy.c_cfl > 0.0 && config.dt_policy.c_cfl <= 1.0))
                throw std::invalid_argument("c_cfl must lie in (0,1]");
            if (!(config.dt_policy.dt_max > 0.0))
                throw std::invalid_argument("dt_max must be > 0");
            break;
    }
}

LinearPropagator build_propagator(GridPtr grid, const AnisotropyParams& params, double dt) {
    validate(params);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
    LinearPropagator prop;
    prop.grid = grid;
    prop.dt = dt;
    prop.factors = exp_factors(dissipation_symbol(*grid, params), dt);
    return prop;
}

SpectralField rhs_nonlinear(const SpectralField& theta) {
    SpectralField adv = advection_term(theta);
    for (auto& c : adv.coeffs) c = -c;
    return adv;
}

SpectralField step_ifrk4(const SpectralField& theta, double dt, const AnisotropyParams& params) {
    validate(params);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
    const auto symbol = dissipation_symbol(*theta.grid, params);
    const auto e = exp_factors(symbol, 0.5 * dt);
    std::vector<double> e2(e.size());
    for (size_t i = 0; i < e.size(); ++i) e2[i] = e[i] * e[i];
    return ifrk4_step(theta, dt, e, e2);
}

double adapt_dt(const PhysicalField& u1, const PhysicalField& u2, const DtPolicy& policy) {
    if (policy.kind == DtPolicy::Kind::fixed) return policy.dt;
    double umax = 0.0;
    for (size_t i = 0; i < u1.values.size(); ++i) {
        const double speed2 =
            u1.values[i] * u1.values[i] + u2.values[i] * u2.values[i];
        umax = std::max(umax, speed2);
    }
    umax = std::sqrt(umax);
    const double dx = std::min(u1.grid->dx1(), u1.grid->dx2());
    return std::min(policy.dt_max, policy.c_cfl * dx / std::max(umax, 1e-12));
}

Trajectory run(const SpectralField& theta0, const SolverConfig& config) {
    validate(config);
    const GridPtr grid = theta0.grid;
    const NormRecorder recorder(grid, config.params, config.s);

    Trajectory traj;
    traj.report.s = config.s;
    traj.report.params = config.params;

    SpectralField theta = theta0;
    double t = 0.0;
    long step_index = 0;
    long sample_index = 0;

    const auto sample = [&](double time) {
        const NormRow& row = recorder.record_row(theta, time, traj.report);
        traj.times.push_back(time);
        if (config.capture_stride > 0 && sample_index % config.capture_stride == 0)
            traj.snapshots.push_back({time, theta});
        ++sample_index;
        return row;
    };

    const NormRow& first = sample(0.0);
    const double h1_limit = 1e6 * std::max(h1_norm(first), 1e-12);

    const auto symbol = dissipation_symbol(*grid, config.params);
    std::vector<double> e, e2;
    double cached_dt = -1.0;
    const auto prepare_factors = [&](double dt) {
        if (dt == cached_dt) return;
        e = exp_factors(symbol, 0.5 * dt);
        e2.resize(e.size());
        for (size_t i = 0; i < e.size(); ++i) e2[i] = e[i] * e[i];
        cached_dt = dt;
    };

    const double t_eps = 1e-12 * std::max(config.t_end, 1.0);
    while (t < config.t_end - t_eps && !traj.aborted) {
        double dt;
        if (config.dt_policy.kind == DtPolicy::Kind::fixed) {
            dt = config.dt_policy.dt;
        } else {
            auto [u1h, u2h] = riesz_velocity(theta);
            dt = adapt_dt(to_physical(u1h), to_physical(u2h), config.dt_policy);
        }
        const double remaining = config.t_end - t;
        bool last = false;
        if (remaining <= dt * (1.0 + 1e-9)) {
            dt = remaining;
            last = true;
        }
        prepare_factors(dt);
        theta = ifrk4_step(theta, dt, e, e2);
        ++step_index;
        t = last ? config.t_end : t + dt;

        const bool finite = all_finite(theta);
        const bool due = step_index % config.diag_stride == 0;
        if (!finite) {
            traj.aborted = true;
            traj.abort_time = t;
            traj.abort_reason = "blow-up or instability at t=" + std::to_string(t);
            sample(t);
            traj.report.rows.back().flag = 1;
            break;
        }
        if (due || last) {
            const NormRow& row = sample(t);
            if (h1_norm(row) > h1_limit) {
                traj.aborted = true;
                traj.abort_time = t;
                traj.abort_reason = "H1 norm exceeded 1e6 x initial at t=" + std::to_string(t);
                traj.report.rows.back().flag = 1;
                break;
            }
        }
    }

    traj.final_state = std::move(theta);
    traj.final_time = t;
    return traj;
}

}  // namespace aqg
