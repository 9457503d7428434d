#pragma once

#include <string>
#include <vector>

#include "aqg/field.hpp"
#include "aqg/operators.hpp"
#include "aqg/params.hpp"

namespace aqg {

/// L^p quadrature norm, p in [2, inf]. Pass std::numeric_limits infinity
/// (or lp_infinity) for the max norm.
double lp_norm(const PhysicalField& f, double p);
inline constexpr double lp_infinity = __builtin_inf();

/// Frequency-weighted L2 norm with weight (1+|xi|^2)^s (inhomogeneous) or
/// |xi|^(2s) (homogeneous, zero mode dropped). Normalized so that s = 0
/// inhomogeneous equals lp_norm(., 2).
double sobolev_norm(const SpectralField& F, double s, bool homogeneous);

/// sobolev_norm of |d_axis|^power applied to F.
double aniso_sobolev_norm(const SpectralField& F, int axis, double power, double s,
                          bool homogeneous);

/// Discrete L2 inner product sum(f*g)*dx1*dx2.
double quadrature_inner_product(const PhysicalField& f, const PhysicalField& g);

/// Global-regularity threshold on (alpha, beta): strict inequality
///   beta > 1/(2 alpha + 1)      for 0 < alpha <= 1/2,
///   beta > (1 - alpha)/(2 alpha) for 1/2 < alpha < 1.
/// Boundary points classify as false.
bool condition_global(double alpha, double beta);

/// Velocity-growth exponent
///   rho = 2 beta / ((2 alpha + 1) beta - 1)                        if alpha <= 1/2,
///   rho = max{2 alpha/(2 alpha - 1), 2 alpha/((2 beta + 1) alpha - 1)}  otherwise,
/// defined only where condition_global holds; rho > 1 there.
double rho_exponent(double alpha, double beta);

/// One sampled row of the monitored quantities. Norm columns store norms
/// (not squares); the cumulative budgets integrate squared norms by the
/// trapezoid rule over the sampled times.
struct NormRow {
    double t = 0.0;
    double l2 = 0.0, l4 = 0.0, linf = 0.0;
    double hs = 0.0, hdot1 = 0.0, hdot2 = 0.0;
    double a1_hs = 0.0, a2_hs = 0.0;
    double a1_hdot1 = 0.0, a2_hdot1 = 0.0;
    double a1_hdot2 = 0.0, a2_hdot2 = 0.0;
    double cumdiss1 = 0.0, cumdiss2 = 0.0;  // int ||d_i^pow theta||_{H^s}^2 dt
    int flag = 0;                           // 1 marks an aborted/non-finite row
    // Not part of the CSV schema: L2-level dissipation monitors backing the
    // energy identity, weighted by mu and nu.
    double a1_l2 = 0.0, a2_l2 = 0.0;
    double cum_l2diss = 0.0;  // int (mu ||.||^2 + nu ||.||^2)_{L2} dt
};

struct NormReport {
    double s = 2.0;
    AnisotropyParams params;
    std::vector<NormRow> rows;
};

/// Precomputed multiplier tables for one (grid, params, s) combination.
class NormRecorder {
  public:
    NormRecorder(GridPtr grid, const AnisotropyParams& params, double s);

    /// Computes all monitored norms of theta at time t, appends the row to
    /// the report with cumulative trapezoid updates, and returns it.
    const NormRow& record_row(const SpectralField& theta, double t, NormReport& report) const;

  private:
    GridPtr grid_;
    AnisotropyParams params_;
    double s_;
    std::vector<double> m1_;   // |k1|^(2 alpha), per i1
    std::vector<double> m2_;   // |k2|^(2 beta), per i2
    std::vector<double> whs_;  // (1+|xi|^2)^s, full table
    std::vector<double> ksq_;  // |xi|^2, full table
};

/// Boundedness certificate thresholds, pinned once here.
inline constexpr double tail_slope_tolerance = 1e-3;   // per unit time
inline constexpr double budget_tail_absolute = 1e-6;

struct Verdict {
    bool bounded = false;
    double sup_norm = 0.0;     // sup_t of hs^2 + cumdiss1 + cumdiss2
    double sup_time = 0.0;
    double growth_rate_tail = 0.0;  // log-slope of hs over the last half
    bool aborted = false;
    std::string reason;
};

/// Empirical boundedness certificate: tail log-slope of the H^s norm at most
/// tail_slope_tolerance and both dissipation budgets settling (last-quarter
/// increment at most half of the second-quarter one, or below
/// budget_tail_absolute). Finite-horizon heuristic, reported as such.
/// Requires at least 16 rows; s must match the report.
Verdict certify_boundedness(const NormReport& report, double s);

/// CSV schema (exact column order):
/// t,l2,l4,linf,hs,hdot1,hdot2,a1_hs,a2_hs,a1_hdot1,a2_hdot1,a1_hdot2,a2_hdot2,cumdiss1,cumdiss2,flag
void write_norm_csv(const NormReport& report, const std::string& path);

}  // namespace aqg
