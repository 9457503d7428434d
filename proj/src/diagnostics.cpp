#include "aqg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace aqg {

double lp_norm(const PhysicalField& f, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(p >= 2.0)) throw std::invalid_argument("lp_norm: p must be >= 2 or infinity");
    const double da = f.grid->dx1() * f.grid->dx2();
    double sum = 0.0;
    for (double v : f.values) sum += std::pow(std::abs(v), p);
    return std::pow(sum * da, 1.0 / p);
}

double sobolev_norm(const SpectralField& F, double s, bool homogeneous) {
    if (!std::isfinite(s)) throw std::invalid_argument("sobolev_norm: s must be finite");
    const Grid& g = *F.grid;
    const double factor = g.l1 * g.l2 / (static_cast<double>(g.size()) * g.size());
    double sum = 0.0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double k1sq = g.k1[i1] * g.k1[i1];
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double ksq = k1sq + g.k2[i2] * g.k2[i2];
            double w;
            if (homogeneous) {
                if (ksq == 0.0 && s != 0.0) continue;  // zero mode contributes nothing
                w = std::pow(ksq, s);
            } else {
                w = std::pow(1.0 + ksq, s);
            }
            sum += w * std::norm(F.coeffs[g.index(i1, i2)]);
        }
    }
    return std::sqrt(sum * factor);
}

double aniso_sobolev_norm(const SpectralField& F, int axis, double power, double s,
                          bool homogeneous) {
    return sobolev_norm(directional_fractional(F, axis, power), s, homogeneous);
}

double quadrature_inner_product(const PhysicalField& f, const PhysicalField& g) {
    if (!f.grid->same_box(*g.grid))
        throw std::invalid_argument("quadrature_inner_product: grid mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < f.values.size(); ++i) sum += f.values[i] * g.values[i];
    return sum * f.grid->dx1() * f.grid->dx2();
}

namespace {

void check_alpha_beta(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("alpha and beta must lie in (0,1)");
}

}  // namespace

bool condition_global(double alpha, double beta) {
    check_alpha_beta(alpha, beta);
    const double threshold =
        alpha <= 0.5 ? 1.0 / (2.0 * alpha + 1.0) : (1.0 - alpha) / (2.0 * alpha);
    return beta > threshold;
}

double rho_exponent(double alpha, double beta) {
    if (!condition_global(alpha, beta))
        throw std::invalid_argument("rho_exponent: exponent undefined outside regularity regime");
    if (alpha <= 0.5) return 2.0 * beta / ((2.0 * alpha + 1.0) * beta - 1.0);
    const double first = 2.0 * alpha / (2.0 * alpha - 1.0);
    const double second = 2.0 * alpha / ((2.0 * beta + 1.0) * alpha - 1.0);
    return std::max(first, second);
}

NormRecorder::NormRecorder(GridPtr grid, const AnisotropyParams& params, double s)
    : grid_(std::move(grid)), params_(params), s_(s) {
    validate(params_);
    if (!std::isfinite(s)) throw std::invalid_argument("NormRecorder: s must be finite");
    const Grid& g = *grid_;
    m1_.resize(g.n1);
    m2_.resize(g.n2);
    for (int i1 = 0; i1 < g.n1; ++i1) m1_[i1] = std::pow(std::abs(g.k1[i1]), 2.0 * params_.alpha);
    for (int i2 = 0; i2 < g.n2; ++i2) m2_[i2] = std::pow(std::abs(g.k2[i2]), 2.0 * params_.beta);
    whs_.resize(g.size());
    ksq_.resize(g.size());
    for (int i1 = 0; i1 < g.n1; ++i1) {
        const double k1sq = g.k1[i1] * g.k1[i1];
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const double ksq = k1sq + g.k2[i2] * g.k2[i2];
            ksq_[g.index(i1, i2)] = ksq;
            whs_[g.index(i1, i2)] = std::pow(1.0 + ksq, s_);
        }
    }
}

const NormRow& NormRecorder::record_row(const SpectralField& theta, double t,
                                        NormReport& report) const {
    if (!theta.grid->same_box(*grid_)) throw std::invalid_argument("record_row: grid mismatch");
    const Grid& g = *grid_;
    const double factor = g.l1 * g.l2 / (static_cast<double>(g.size()) * g.size());

    double l2 = 0, hs = 0, hd1 = 0, hd2 = 0;
    double a1hs = 0, a2hs = 0, a1hd1 = 0, a2hd1 = 0, a1hd2 = 0, a2hd2 = 0;
    double a1l2 = 0, a2l2 = 0;
    for (int i1 = 0; i1 < g.n1; ++i1) {
        for (int i2 = 0; i2 < g.n2; ++i2) {
            const int idx = g.index(i1, i2);
            const double p = std::norm(theta.coeffs[idx]) * factor;
            const double ksq = ksq_[idx];
            const double k4 = ksq * ksq;
            const double whs = whs_[idx];
            const double d1 = m1_[i1] * p;
            const double d2 = m2_[i2] * p;
            l2 += p;
            hs += whs * p;
            hd1 += ksq * p;
            hd2 += k4 * p;
            a1hs += whs * d1;
            a2hs += whs * d2;
            a1hd1 += ksq * d1;
            a2hd1 += ksq * d2;
            a1hd2 += k4 * d1;
            a2hd2 += k4 * d2;
            a1l2 += d1;
            a2l2 += d2;
        }
    }

    NormRow row;
    row.t = t;
    row.l2 = std::sqrt(l2);
    row.hs = std::sqrt(hs);
    row.hdot1 = std::sqrt(hd1);
    row.hdot2 = std::sqrt(hd2);
    row.a1_hs = std::sqrt(a1hs);
    row.a2_hs = std::sqrt(a2hs);
    row.a1_hdot1 = std::sqrt(a1hd1);
    row.a2_hdot1 = std::sqrt(a2hd1);
    row.a1_hdot2 = std::sqrt(a1hd2);
    row.a2_hdot2 = std::sqrt(a2hd2);
    row.a1_l2 = std::sqrt(a1l2);
    row.a2_l2 = std::sqrt(a2l2);

    const PhysicalField phys = to_physical(theta);
    row.l4 = lp_norm(phys, 4.0);
    row.linf = lp_norm(phys, lp_infinity);

    if (!report.rows.empty()) {
        const NormRow& prev = report.rows.back();
        const double h = t - prev.t;
        if (h < 0.0) throw std::invalid_argument("record_row: times must be non-decreasing");
        row.cumdiss1 = prev.cumdiss1 +
                       0.5 * h * (prev.a1_hs * prev.a1_hs + row.a1_hs * row.a1_hs);
        row.cumdiss2 = prev.cumdiss2 +
                       0.5 * h * (prev.a2_hs * prev.a2_hs + row.a2_hs * row.a2_hs);
        const double prev_diss = params_.mu * prev.a1_l2 * prev.a1_l2 +
                                 params_.nu * prev.a2_l2 * prev.a2_l2;
        const double cur_diss =
            params_.mu * row.a1_l2 * row.a1_l2 + params_.nu * row.a2_l2 * row.a2_l2;
        row.cum_l2diss = prev.cum_l2diss + 0.5 * h * (prev_diss + cur_diss);
    }

    const double probe = row.l2 + row.hs + row.linf + row.a1_hs + row.a2_hs;
    row.flag = std::isfinite(probe) ? 0 : 1;

    report.rows.push_back(row);
    return report.rows.back();
}

namespace {

// Cumulative budget value at the last sample with t <= q.
double budget_at(const std::vector<NormRow>& rows, double q, double NormRow::*member) {
    double value = rows.front().*member;
    for (const auto& r : rows) {
        if (r.t <= q + 1e-12) value = r.*member;
        else break;
    }
    return value;
}

bool budget_settles(const std::vector<NormRow>& rows, double t_end, double NormRow::*member) {
    const double q1 = budget_at(rows, 0.25 * t_end, member);
    const double q2 = budget_at(rows, 0.50 * t_end, member);
    const double q3 = budget_at(rows, 0.75 * t_end, member);
    const double q4 = rows.back().*member;
    const double second_quarter = q2 - q1;
    const double last_quarter = q4 - q3;
    return last_quarter <= 0.5 * second_quarter + 1e-300 || last_quarter <= budget_tail_absolute;
}

}  // namespace

Verdict certify_boundedness(const NormReport& report, double s) {
    if (report.rows.size() < 16)
        throw std::invalid_argument("certify_boundedness: need at least 16 rows");
    if (s != report.s)
        throw std::invalid_argument("certify_boundedness: s does not match the report");
    const auto& rows = report.rows;
    const double t_end = rows.back().t;

    Verdict v;
    for (const auto& r : rows) {
        if (r.flag != 0) {
            v.aborted = true;
            v.reason = "run aborted (non-finite state)";
        }
        const double comb = r.hs * r.hs + r.cumdiss1 + r.cumdiss2;
        if (comb > v.sup_norm) {
            v.sup_norm = comb;
            v.sup_time = r.t;
        }
    }

    // Least-squares slope of ln(hs) over the last half of the run.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const auto& r : rows) {
        if (r.t < 0.5 * t_end) continue;
        const double y = std::log(std::max(r.hs, 1e-300));
        sx += r.t;
        sy += y;
        sxx += r.t * r.t;
        sxy += r.t * y;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    v.growth_rate_tail = denom > 0.0 ? (count * sxy - sx * sy) / denom : 0.0;

    const bool budgets_ok = budget_settles(rows, t_end, &NormRow::cumdiss1) &&
                            budget_settles(rows, t_end, &NormRow::cumdiss2);
    v.bounded = !v.aborted && v.growth_rate_tail <= tail_slope_tolerance && budgets_ok;
    if (!v.bounded && v.reason.empty()) {
        v.reason = v.growth_rate_tail > tail_slope_tolerance ? "tail growth rate above tolerance"
                                                             : "dissipation budgets not settling";
    }
    return v;
}

void write_norm_csv(const NormReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("write_norm_csv: cannot open " + path);
    out << "t,l2,l4,linf,hs,hdot1,hdot2,a1_hs,a2_hs,a1_hdot1,a2_hdot1,a1_hdot2,a2_hdot2,"
           "cumdiss1,cumdiss2,flag\n";
    char buf[512];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof(buf),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                      "%.17g,%.17g,%.17g,%d\n",
                      r.t, r.l2, r.l4, r.linf, r.hs, r.hdot1, r.hdot2, r.a1_hs, r.a2_hs,
                      r.a1_hdot1, r.a2_hdot1, r.a1_hdot2, r.a2_hdot2, r.cumdiss1, r.cumdiss2,
                      r.flag);
        out << buf;
    }
    if (!out) throw std::runtime_error("write_norm_csv: write failed for " + path);
}

}  // namespace aqg
