#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectral/milp.hpp"

namespace spectral {
namespace lp {

constexpr double kFeasTol = 1e-7;
constexpr double kOptTol = 1e-7;
constexpr double kPivotTol = 1e-9;

struct LpOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> x; // structural values
    double objective = 0.0;
    long long iterations = 0;
};

// Two-phase primal simplex on the full dense tableau with explicit
// variable bounds (structurals, slacks and phase-1 artificials all live
// in one column space). Dantzig pricing with a Bland fallback after
// 3*(rows+cols) iterations. Maximization form; callers negate for min.
class DenseSimplex {
public:
    // rows: pointers to constraints; bounds per structural variable;
    // c: dense objective over structurals (maximize).
    DenseSimplex(const std::vector<const Constraint *> &rows, const std::vector<double> &lb,
                 const std::vector<double> &ub, const std::vector<double> &c)
        : nv_(static_cast<int>(lb.size())), m_(static_cast<int>(rows.size())) {
        ncap_ = nv_ + 2 * m_;
        ncols_ = nv_ + m_;
        T_.assign(static_cast<size_t>(m_) * ncap_, 0.0);
        lb_.assign(ncap_, 0.0);
        ub_.assign(ncap_, 0.0);
        cost_.assign(ncap_, 0.0);
        state_.assign(ncap_, AT_LOWER);
        basis_.resize(m_);
        xb_.assign(m_, 0.0);
        rhs_.resize(m_);

        for (int j = 0; j < nv_; ++j) {
            lb_[j] = lb[j];
            ub_[j] = ub[j];
            cost_[j] = c[j];
            if (std::isfinite(lb[j]))
                state_[j] = AT_LOWER;
            else if (std::isfinite(ub[j]))
                state_[j] = AT_UPPER;
            else
                state_[j] = FREE;
        }
        for (int i = 0; i < m_; ++i) {
            const Constraint &r = *rows[i];
            for (const LinTerm &t : r.terms) at(i, t.var) += t.coef;
            const int sj = nv_ + i;
            at(i, sj) = 1.0;
            switch (r.sense) {
                case Sense::LE: lb_[sj] = 0.0; ub_[sj] = kInf; break;
                case Sense::GE: lb_[sj] = -kInf; ub_[sj] = 0.0; break;
                case Sense::EQ: lb_[sj] = 0.0; ub_[sj] = 0.0; break;
            }
            rhs_[i] = r.rhs;
            basis_[i] = sj;
            state_[sj] = BASIC;
        }
    }

    LpOutcome solve() {
        LpOutcome out;
        install_artificials();
        if (n_art_ > 0) {
            optimize(true);
            double infeas = 0.0;
            for (int j = ncols_art_begin_; j < ncols_; ++j) infeas += std::abs(col_value(j));
            if (infeas > kFeasTol * (1.0 + std::abs(rhs_scale_))) {
                out.status = SolveStatus::Infeasible;
                out.iterations = iterations_;
                return out;
            }
            for (int j = ncols_art_begin_; j < ncols_; ++j) {
                lb_[j] = 0.0;
                ub_[j] = 0.0; // artificials pinned for phase 2
            }
        }
        const bool bounded = optimize(false);
        out.iterations = iterations_;
        if (!bounded) {
            out.status = SolveStatus::Unbounded;
            return out;
        }
        out.status = SolveStatus::Optimal;
        out.x.resize(nv_);
        for (int j = 0; j < nv_; ++j) out.x[j] = col_value(j);
        out.objective = 0.0;
        for (int j = 0; j < nv_; ++j) out.objective += cost_[j] * out.x[j];
        return out;
    }

private:
    enum ColState : uint8_t { BASIC, AT_LOWER, AT_UPPER, FREE };

    double &at(int i, int j) { return T_[static_cast<size_t>(i) * ncap_ + j]; }
    double at(int i, int j) const { return T_[static_cast<size_t>(i) * ncap_ + j]; }

    double nonbasic_value(int j) const {
        if (state_[j] == AT_LOWER) return lb_[j];
        if (state_[j] == AT_UPPER) return ub_[j];
        return 0.0; // FREE
    }

    double col_value(int j) const {
        if (state_[j] == BASIC) {
            for (int i = 0; i < m_; ++i)
                if (basis_[i] == j) return xb_[i];
        }
        return nonbasic_value(j);
    }

    // Slack basis; rows whose slack value violates its bounds get an
    // artificial basic column carrying the residual.
    void install_artificials() {
        for (int i = 0; i < m_; ++i) {
            double s = rhs_[i];
            for (int j = 0; j < nv_; ++j)
                if (at(i, j) != 0.0) s -= at(i, j) * nonbasic_value(j);
            xb_[i] = s;
            rhs_scale_ = std::max(rhs_scale_, std::abs(rhs_[i]));
        }
        ncols_art_begin_ = ncols_;
        n_art_ = 0;
        for (int i = 0; i < m_; ++i) {
            const int sj = basis_[i];
            double clamped = xb_[i];
            if (xb_[i] < lb_[sj] - kFeasTol)
                clamped = lb_[sj];
            else if (xb_[i] > ub_[sj] + kFeasTol)
                clamped = ub_[sj];
            else
                continue;
            const double residual = xb_[i] - clamped;
            const int aj = ncols_++;
            ++n_art_;
            if (ncols_ > ncap_) throw std::logic_error("simplex: artificial capacity");
            at(i, aj) = 1.0;
            if (residual >= 0.0) {
                lb_[aj] = 0.0;
                ub_[aj] = kInf;
                phase1_cost_.push_back(-1.0);
            } else {
                lb_[aj] = -kInf;
                ub_[aj] = 0.0;
                phase1_cost_.push_back(1.0);
            }
            state_[sj] = (clamped == lb_[sj]) ? AT_LOWER : AT_UPPER;
            state_[aj] = BASIC;
            basis_[i] = aj;
            xb_[i] = residual;
        }
    }

    void compute_reduced_costs(bool phase1, std::vector<double> &z) const {
        std::vector<double> cb(m_);
        auto col_cost = [&](int j) {
            if (phase1) return j >= ncols_art_begin_ ? phase1_cost_[j - ncols_art_begin_] : 0.0;
            return j < nv_ ? cost_[j] : 0.0;
        };
        for (int i = 0; i < m_; ++i) cb[i] = col_cost(basis_[i]);
        z.assign(ncols_, 0.0);
        for (int j = 0; j < ncols_; ++j) {
            if (state_[j] == BASIC) continue;
            double s = col_cost(j);
            for (int i = 0; i < m_; ++i)
                if (cb[i] != 0.0) s -= cb[i] * at(i, j);
            z[j] = s;
        }
    }

    // Returns false on unbounded (phase 2 only).
    bool optimize(bool phase1) {
        std::vector<double> z;
        compute_reduced_costs(phase1, z);
        const long long bland_after = 3LL * (m_ + ncols_);
        const long long cap = 200LL * (m_ + ncols_) + 20000;
        long long local_iter = 0;
        for (;;) {
            if (local_iter > cap) throw std::runtime_error("simplex: iteration cap exceeded");
            const bool bland = local_iter > bland_after;
            int enter = -1;
            double best = kOptTol;
            for (int j = 0; j < ncols_; ++j) {
                if (state_[j] == BASIC || lb_[j] == ub_[j]) continue;
                double gain = 0.0;
                if (state_[j] == AT_LOWER && z[j] > kOptTol) gain = z[j];
                else if (state_[j] == AT_UPPER && z[j] < -kOptTol) gain = -z[j];
                else if (state_[j] == FREE && std::abs(z[j]) > kOptTol) gain = std::abs(z[j]);
                else continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (gain > best) {
                    best = gain;
                    enter = j;
                }
            }
            if (enter < 0) return true; // optimal for this phase

            const int dir = (state_[enter] == AT_UPPER || (state_[enter] == FREE && z[enter] < 0.0)) ? -1 : 1;
            double t_limit = ub_[enter] - lb_[enter]; // bound-flip distance (inf when one-sided)
            int leave_row = -1;
            double t_best = t_limit;
            double leave_piv = 0.0;
            int leave_target = AT_LOWER;
            for (int i = 0; i < m_; ++i) {
                const double alpha = dir * at(i, enter);
                if (std::abs(alpha) <= kPivotTol) continue;
                const int bj = basis_[i];
                double t;
                int target;
                if (alpha > 0.0) {
                    if (!std::isfinite(lb_[bj])) continue;
                    t = (xb_[i] - lb_[bj]) / alpha;
                    target = AT_LOWER;
                } else {
                    if (!std::isfinite(ub_[bj])) continue;
                    t = (xb_[i] - ub_[bj]) / alpha;
                    target = AT_UPPER;
                }
                if (t < 0.0) t = 0.0; // fp drift on degenerate bases
                const bool better =
                    t < t_best - 1e-12 ||
                    (t <= t_best + 1e-12 && leave_row >= 0 &&
                     (bland ? bj < basis_[leave_row] : std::abs(alpha) > std::abs(leave_piv)));
                if (leave_row < 0 ? t <= t_best : better) {
                    t_best = t;
                    leave_row = i;
                    leave_piv = alpha;
                    leave_target = target;
                }
            }

            ++iterations_;
            ++local_iter;
            if (leave_row < 0) {
                if (!std::isfinite(t_limit)) {
                    if (phase1) throw std::logic_error("simplex: phase-1 unbounded");
                    return false; // unbounded ray
                }
                // bound flip
                for (int i = 0; i < m_; ++i) xb_[i] -= dir * t_limit * at(i, enter);
                state_[enter] = (state_[enter] == AT_LOWER) ? AT_UPPER : AT_LOWER;
                continue;
            }

            const double t = t_best;
            const double enter_val = nonbasic_value(enter) + dir * t;
            for (int i = 0; i < m_; ++i)
                if (i != leave_row) xb_[i] -= dir * t * at(i, enter);
            const int leaving = basis_[leave_row];
            state_[leaving] = static_cast<ColState>(leave_target);
            basis_[leave_row] = enter;
            state_[enter] = BASIC;
            xb_[leave_row] = enter_val;

            // Gauss-Jordan elimination on the tableau and reduced costs.
            const double piv = at(leave_row, enter);
            double *prow = &T_[static_cast<size_t>(leave_row) * ncap_];
            const double inv = 1.0 / piv;
            for (int j = 0; j < ncols_; ++j) prow[j] *= inv;
            for (int i = 0; i < m_; ++i) {
                if (i == leave_row) continue;
                const double f = at(i, enter);
                if (f == 0.0) continue;
                double *row = &T_[static_cast<size_t>(i) * ncap_];
                for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
                row[enter] = 0.0;
            }
            const double zf = z[enter];
            if (zf != 0.0) {
                for (int j = 0; j < ncols_; ++j) z[j] -= zf * prow[j];
            }
            z[enter] = 0.0;
        }
    }

    int nv_, m_, ncap_, ncols_ = 0;
    int ncols_art_begin_ = 0, n_art_ = 0;
    double rhs_scale_ = 1.0;
    std::vector<double> T_, lb_, ub_, cost_, xb_, rhs_;
    std::vector<double> phase1_cost_;
    std::vector<int> basis_;
    std::vector<uint8_t> state_;
    long long iterations_ = 0;
};

} // namespace lp
} // namespace spectral
