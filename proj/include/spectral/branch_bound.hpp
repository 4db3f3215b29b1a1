#pragma once

#include <functional>
#include <optional>
#include <queue>

#include "spectral/milp.hpp"
#include "spectral/simplex.hpp"

namespace spectral {

// Emits valid rows violated by the current point (empty when none).
// Used for connectivity separation; generated rows persist for the rest
// of the solve and must hold for every feasible solution of the model.
using RowGenerator = std::function<std::vector<Constraint>(const std::vector<double> &, bool integral)>;

struct MilpOptions {
    long long node_limit = 2'000'000;
    RowGenerator generator;
    std::optional<std::vector<double>> incumbent_hint;
};

namespace detail {

class MilpSolver {
public:
    MilpSolver(const MilpModel &model, MilpOptions opts)
        : model_(model), opts_(std::move(opts)) {
        for (const Constraint &c : model.constraints())
            (c.lazy ? lazy_rows_ : eager_rows_).push_back(&c);
        for (const Constraint &c : model.cut_pool()) lazy_rows_.push_back(&c);
        lazy_active_.assign(lazy_rows_.size(), 0);
        base_lb_.resize(model.var_count());
        base_ub_.resize(model.var_count());
        cost_.assign(model.var_count(), 0.0);
        sign_ = model.objective_sense() == ObjSense::Max ? 1.0 : -1.0;
        for (const LinTerm &t : model.objective()) cost_[t.var] += sign_ * t.coef;
        for (int v = 0; v < model.var_count(); ++v) {
            base_lb_[v] = model.variable(v).lb;
            base_ub_[v] = model.variable(v).ub;
        }
    }

    // LP relaxation of the current bounds; lazy rows are activated until
    // the returned point satisfies every row of the model.
    lp::LpOutcome solve_relaxation(const std::vector<double> &lb, const std::vector<double> &ub) {
        for (;;) {
            std::vector<const Constraint *> rows = eager_rows_;
            for (size_t k = 0; k < lazy_rows_.size(); ++k)
                if (lazy_active_[k]) rows.push_back(lazy_rows_[k]);
            for (const Constraint &c : generated_rows_) rows.push_back(&c);

            lp::DenseSimplex simplex(rows, lb, ub, cost_);
            lp::LpOutcome out = simplex.solve();
            lp_iterations_ += out.iterations;
            if (out.status == SolveStatus::Infeasible) return out;
            if (out.status == SolveStatus::Unbounded) {
                bool activated = false;
                for (size_t k = 0; k < lazy_rows_.size(); ++k)
                    if (!lazy_active_[k]) {
                        lazy_active_[k] = 1;
                        activated = true;
                    }
                if (!activated) return out;
                continue; // re-solve with the full row set to certify
            }
            int worst = -1;
            double worst_violation = lp::kFeasTol;
            int activated = 0;
            for (size_t k = 0; k < lazy_rows_.size(); ++k) {
                if (lazy_active_[k]) continue;
                const Constraint &c = *lazy_rows_[k];
                const double lhs = evaluate(c.terms, out.x);
                double viol = 0.0;
                if (c.sense == Sense::LE) viol = lhs - c.rhs;
                else if (c.sense == Sense::GE) viol = c.rhs - lhs;
                else viol = std::abs(lhs - c.rhs);
                if (viol > lp::kFeasTol) {
                    lazy_active_[k] = 1;
                    ++activated;
                    if (viol > worst_violation) {
                        worst_violation = viol;
                        worst = static_cast<int>(k);
                    }
                }
            }
            (void)worst;
            if (activated == 0) return out;
        }
    }

    MilpSolution solve() {
        struct Node {
            std::vector<std::pair<int, double>> fix_lb, fix_ub;
            double bound;
            int depth;
            long long id;
        };
        auto cmp = [](const Node &a, const Node &b) {
            if (a.bound != b.bound) return a.bound < b.bound; // best bound first
            if (a.depth != b.depth) return a.depth < b.depth; // then deepest
            return a.id > b.id;                               // then FIFO among twins
        };
        std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);

        MilpSolution result;
        result.status = SolveStatus::Infeasible;
        double inc_obj = -kInf;
        std::vector<double> inc_x;
        bool inc_found = false;

        if (opts_.incumbent_hint && hint_feasible(*opts_.incumbent_hint)) {
            inc_x = *opts_.incumbent_hint;
            inc_obj = 0.0;
            for (int v = 0; v < model_.var_count(); ++v) inc_obj += cost_[v] * inc_x[v];
            inc_found = true;
        }

        long long next_id = 0;
        open.push({{}, {}, kInf, 0, next_id++});
        long long nodes = 0;
        bool hit_node_limit = false;

        while (!open.empty()) {
            if (nodes >= opts_.node_limit) {
                hit_node_limit = true;
                break;
            }
            Node node = open.top();
            open.pop();
            if (node.bound <= inc_obj + 1e-9 && inc_found) continue;
            ++nodes;

            std::vector<double> lb = base_lb_, ub = base_ub_;
            for (auto &[v, val] : node.fix_lb) lb[v] = val;
            for (auto &[v, val] : node.fix_ub) ub[v] = val;

            lp::LpOutcome rel;
            bool node_done = false;
            for (int round = 0;; ++round) {
                rel = solve_relaxation(lb, ub);
                if (rel.status == SolveStatus::Infeasible) {
                    node_done = true;
                    break;
                }
                if (rel.status == SolveStatus::Unbounded) {
                    MilpSolution s;
                    s.status = SolveStatus::Unbounded;
                    s.nodes = nodes;
                    s.lp_iterations = lp_iterations_;
                    return s;
                }
                if (rel.objective <= inc_obj + 1e-9 && inc_found) {
                    node_done = true;
                    break;
                }
                if (!opts_.generator) break;
                std::vector<Constraint> extra = opts_.generator(rel.x, integral(rel.x));
                if (extra.empty()) break;
                for (Constraint &c : extra) generated_rows_.push_back(std::move(c));
                if (round > 200) throw std::runtime_error("solve_milp: row generation did not settle");
            }
            if (node_done) continue;

            const int frac = most_fractional(rel.x);
            if (frac < 0) {
                if (!inc_found || rel.objective > inc_obj + 1e-9) {
                    inc_found = true;
                    inc_obj = rel.objective;
                    inc_x = rel.x;
                }
                continue;
            }
            Node down = node, up = node;
            down.fix_ub.push_back({frac, 0.0});
            down.bound = rel.objective;
            down.depth = node.depth + 1;
            down.id = next_id++;
            up.fix_lb.push_back({frac, 1.0});
            up.bound = rel.objective;
            up.depth = node.depth + 1;
            up.id = next_id++;
            open.push(std::move(down)); // x <= floor explored first
            open.push(std::move(up));
        }

        result.nodes = nodes;
        result.lp_iterations = lp_iterations_;
        if (inc_found) {
            result.status = hit_node_limit ? SolveStatus::NodeLimit : SolveStatus::Optimal;
            result.values = inc_x;
            round_binaries(result.values);
            result.objective = sign_ * inc_obj;
        } else {
            result.status = hit_node_limit ? SolveStatus::NodeLimit : SolveStatus::Infeasible;
        }
        return result;
    }

private:
    bool integral(const std::vector<double> &x) const {
        return most_fractional(x) < 0;
    }

    // Most-fractional binary, lowest index on ties; -1 when integral.
    int most_fractional(const std::vector<double> &x) const {
        int arg = -1;
        double best = 1e-6;
        for (int v = 0; v < model_.var_count(); ++v) {
            if (model_.variable(v).kind != VarKind::Binary) continue;
            const double f = std::abs(x[v] - std::round(x[v]));
            if (f > best + 1e-12) {
                best = f;
                arg = v;
            }
        }
        return arg;
    }

    bool hint_feasible(const std::vector<double> &x) const {
        if (static_cast<int>(x.size()) != model_.var_count()) return false;
        for (int v = 0; v < model_.var_count(); ++v) {
            const Variable &var = model_.variable(v);
            if (x[v] < var.lb - 1e-9 || x[v] > var.ub + 1e-9) return false;
            if (var.kind == VarKind::Binary && std::abs(x[v] - std::round(x[v])) > 1e-6) return false;
        }
        for (const Constraint &c : model_.constraints())
            if (!satisfied(c, x, lp::kFeasTol)) return false;
        for (const Constraint &c : model_.cut_pool())
            if (!satisfied(c, x, lp::kFeasTol)) return false;
        if (opts_.generator && !opts_.generator(x, true).empty()) return false;
        return true;
    }

    void round_binaries(std::vector<double> &x) const {
        for (int v = 0; v < model_.var_count(); ++v)
            if (model_.variable(v).kind == VarKind::Binary) x[v] = std::round(x[v]);
    }

    const MilpModel &model_;
    MilpOptions opts_;
    std::vector<const Constraint *> eager_rows_, lazy_rows_;
    std::vector<uint8_t> lazy_active_;
    std::vector<Constraint> generated_rows_;
    std::vector<double> base_lb_, base_ub_, cost_;
    double sign_ = 1.0;
    long long lp_iterations_ = 0;
};

} // namespace detail

// LP relaxation of the model (binaries relaxed to [0,1]).
inline MilpSolution solve_lp(const MilpModel &model) {
    detail::MilpSolver solver(model, {});
    std::vector<double> lb(model.var_count()), ub(model.var_count());
    for (int v = 0; v < model.var_count(); ++v) {
        lb[v] = model.variable(v).lb;
        ub[v] = model.variable(v).ub;
    }
    lp::LpOutcome out = solver.solve_relaxation(lb, ub);
    MilpSolution s;
    s.status = out.status;
    s.lp_iterations = out.iterations;
    if (out.status == SolveStatus::Optimal) {
        s.values = out.x;
        s.objective = model.objective_sense() == ObjSense::Max ? out.objective : -out.objective;
    }
    return s;
}

// Proven-optimal integral solution via best-bound branch and bound over
// LP relaxations. Deterministic: most-fractional branching (lowest index
// ties), "<= floor" child explored first.
inline MilpSolution solve_milp(const MilpModel &model, MilpOptions opts = {}) {
    detail::MilpSolver solver(model, std::move(opts));
    return solver.solve();
}

} // namespace spectral
