#pragma once

#include <string>
#include <vector>

#include "aqg/sampler.hpp"

namespace aqg {

struct OracleReport {
    std::string lemma;
    std::string params;
    long samples = 0;
    double max_ratio = 0.0;
    long violations = 0;
    long worst_case_seed = 0;
};

/// Interpolation check || |d_axis|^(z s1 + (1-z) s2) f || <= || |d_axis|^s1 f ||^z
/// * || |d_axis|^s2 f ||^(1-z), all norms with a fixed outer index s
/// (inhomogeneous or homogeneous weight). Discrete Hoelder, so the returned
/// LHS/RHS never exceeds 1 beyond rounding. Zero field gives 0.
double check_interpolation(const SpectralField& f, int axis, double s, double s1, double s2,
                           double z, bool homogeneous);

/// ||R_perp f||_Lp / ||f||_Lp for one field (pointwise Euclidean magnitude
/// of the velocity).
double riesz_lp_ratio(const SpectralField& f, double p);

/// Empirical bound for the Riesz L^p estimate: max ratio over n_samples and
/// over 2*n_samples draws. At p = 2 the symbol bound makes the ratio exact
/// (<= 1); violations counts exceedances beyond 1+1e-10 there. For p > 2 a
/// violation records a failed stability check (max over 2N > 1.2 max over N).
OracleReport estimate_riesz_lp_constant(double p, const FieldSampler& sampler, long n_samples);

struct LogSobolevCheck {
    double lhs = 0.0;        // ||R_perp f||_Linf
    double rhs_shape = 0.0;  // 1 + ||f||_L2 + ||f||_Linf ln(e + || |grad|^sigma f ||_L2)
    double ratio = 0.0;
};

/// Requires sigma > 1.
LogSobolevCheck check_log_sobolev(const SpectralField& f, double sigma);

/// Max over a log-spaced grid on [1, 1e12] (plus the maximizer e^(1/alpha))
/// of ln(x) - C(alpha) x^alpha with the sharp constant C(alpha) = 1/(alpha e).
/// Nonpositive up to rounding.
double check_ln_bound(double alpha, long n_points);

struct SuiteResult {
    std::vector<OracleReport> reports;
    bool passed = false;
    std::string detail;
};

SuiteResult lemma1_suite(GridPtr grid, long n_samples, long seed);
SuiteResult lemma2_suite(GridPtr grid, long exact_samples, long empirical_samples, long seed);
SuiteResult lemma3_suite(GridPtr grid, long n_samples, long seed);
SuiteResult lemma6_suite(long n_points);

void write_oracle_csv(const std::vector<OracleReport>& reports, const std::string& path);

}  // namespace aqg
