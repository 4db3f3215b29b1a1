#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Binary, Continuous };
enum class Sense { LE, EQ, GE };
enum class ObjSense { Max, Min };

struct LinTerm {
    int var;
    double coef;
};

using LinExpr = std::vector<LinTerm>;

struct Constraint {
    LinExpr terms;
    Sense sense = Sense::LE;
    double rhs = 0.0;
    bool lazy = false; // row enters the working LP only once violated
};

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lb = 0.0;
    double ub = kInf;
};

// Variables, linear constraints, a linear objective and a growable cut
// pool; the substrate all formulations compile down to.
class MilpModel {
public:
    int add_variable(std::string name, VarKind kind, double lb = 0.0, double ub = kInf) {
        if (kind == VarKind::Binary) {
            lb = 0.0;
            ub = 1.0;
        }
        if (lb > ub) throw std::invalid_argument("MilpModel: variable lower bound above upper");
        vars_.push_back({std::move(name), kind, lb, ub});
        return static_cast<int>(vars_.size()) - 1;
    }

    void add_constraint(Constraint c) {
        check_terms(c.terms);
        constraints_.push_back(std::move(c));
    }

    void add_cut(Constraint c) {
        check_terms(c.terms);
        c.lazy = true;
        cut_pool_.push_back(std::move(c));
    }

    void set_objective(LinExpr terms, ObjSense sense) {
        check_terms(terms);
        objective_ = std::move(terms);
        obj_sense_ = sense;
    }

    int var_count() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable> &variables() const { return vars_; }
    Variable &variable(int v) { return vars_[v]; }
    const Variable &variable(int v) const { return vars_[v]; }
    const std::vector<Constraint> &constraints() const { return constraints_; }
    const std::vector<Constraint> &cut_pool() const { return cut_pool_; }
    const LinExpr &objective() const { return objective_; }
    ObjSense objective_sense() const { return obj_sense_; }

    int find_variable(const std::string &name) const {
        for (int v = 0; v < var_count(); ++v)
            if (vars_[v].name == name) return v;
        return -1;
    }

private:
    void check_terms(const LinExpr &terms) const {
        for (const LinTerm &t : terms)
            if (t.var < 0 || t.var >= var_count())
                throw std::invalid_argument("MilpModel: constraint references undeclared variable");
    }

    std::vector<Variable> vars_;
    std::vector<Constraint> constraints_;
    std::vector<Constraint> cut_pool_;
    LinExpr objective_;
    ObjSense obj_sense_ = ObjSense::Max;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, NodeLimit };

struct MilpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> values;
    double objective = 0.0;
    long long nodes = 0;
    long long lp_iterations = 0;

    double value(int var) const { return values[var]; }
};

inline double evaluate(const LinExpr &terms, const std::vector<double> &x) {
    double s = 0.0;
    for (const LinTerm &t : terms) s += t.coef * x[t.var];
    return s;
}

inline bool satisfied(const Constraint &c, const std::vector<double> &x, double tol) {
    const double lhs = evaluate(c.terms, x);
    switch (c.sense) {
        case Sense::LE: return lhs <= c.rhs + tol;
        case Sense::GE: return lhs >= c.rhs - tol;
        case Sense::EQ: return std::abs(lhs - c.rhs) <= tol;
    }
    return false;
}

// CPLEX-style LP text rendering for debugging against external solvers.
inline std::string to_lp_string(const MilpModel &m) {
    auto term_str = [&](const LinExpr &e) {
        std::string s;
        for (size_t k = 0; k < e.size(); ++k) {
            const double c = e[k].coef;
            if (k == 0)
                s += (c < 0 ? "- " : "");
            else
                s += (c < 0 ? " - " : " + ");
            s += std::to_string(std::abs(c)) + " " + m.variable(e[k].var).name;
        }
        return s.empty() ? std::string("0") : s;
    };
    std::string out = m.objective_sense() == ObjSense::Max ? "Maximize\n obj: " : "Minimize\n obj: ";
    out += term_str(m.objective()) + "\nSubject To\n";
    int r = 0;
    auto emit = [&](const Constraint &c) {
        const char *op = c.sense == Sense::LE ? "<=" : (c.sense == Sense::GE ? ">=" : "=");
        out += " c" + std::to_string(r++) + ": " + term_str(c.terms) + " " + op + " " +
               std::to_string(c.rhs) + "\n";
    };
    for (const Constraint &c : m.constraints()) emit(c);
    for (const Constraint &c : m.cut_pool()) emit(c);
    out += "Bounds\n";
    for (int v = 0; v < m.var_count(); ++v) {
        const Variable &var = m.variable(v);
        out += " " + std::to_string(var.lb) + " <= " + var.name + " <= " +
               (std::isfinite(var.ub) ? std::to_string(var.ub) : std::string("+inf")) + "\n";
    }
    out += "Binaries\n";
    for (int v = 0; v < m.var_count(); ++v)
        if (m.variable(v).kind == VarKind::Binary) out += " " + m.variable(v).name;
    out += "\nEnd\n";
    return out;
}

} // namespace spectral
