#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spectral/matrix.hpp"

namespace spectral {

// Full symmetric eigendecomposition: eigenvalues ascending, matching
// orthonormal eigenvectors as columns.
struct Spectrum {
    Vector values;
    Matrix vectors;

    Vector vector(int k) const { return vectors.column(k); }
};

namespace detail {

inline double offdiag_frobenius(const Matrix &a) {
    double s = 0.0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(2.0 * s);
}

// One cyclic sweep of Jacobi rotations; updates a (and v when given).
inline void jacobi_sweep(Matrix &a, Matrix *v, double skip_tol) {
    const int n = a.n();
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double apq = a.at(p, q);
            if (std::abs(apq) <= skip_tol) continue;
            const double app = a.at(p, p), aqq = a.at(q, q);
            const double theta = (aqq - app) / (2.0 * apq);
            double t = (theta >= 0.0) ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                      : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            for (int k = 0; k < n; ++k) {
                const double akp = a.at(k, p), akq = a.at(k, q);
                a.at(k, p) = c * akp - s * akq;
                a.at(k, q) = s * akp + c * akq;
            }
            for (int k = 0; k < n; ++k) {
                const double apk = a.at(p, k), aqk = a.at(q, k);
                a.at(p, k) = c * apk - s * aqk;
                a.at(q, k) = s * apk + c * aqk;
            }
            if (v) {
                for (int k = 0; k < n; ++k) {
                    const double vkp = v->at(k, p), vkq = v->at(k, q);
                    v->at(k, p) = c * vkp - s * vkq;
                    v->at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
}

// Positive sign on the largest-magnitude component, lowest index on ties.
inline void fix_sign(Matrix &vectors, int col) {
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < vectors.n(); ++i) {
        const double m = std::abs(vectors.at(i, col));
        if (m > best + 1e-15) {
            best = m;
            arg = i;
        }
    }
    if (vectors.at(arg, col) < 0.0)
        for (int i = 0; i < vectors.n(); ++i) vectors.at(i, col) = -vectors.at(i, col);
}

inline void jacobi_run(Matrix &a, Matrix *v, int sweep_cap) {
    const double target = 1e-12 * std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < sweep_cap; ++sweep) {
        if (offdiag_frobenius(a) <= target) return;
        jacobi_sweep(a, v, target / (a.n() * a.n() + 1.0));
    }
    if (offdiag_frobenius(a) > target)
        throw std::runtime_error("spectrum: Jacobi did not converge within sweep cap");
}

} // namespace detail

// Cyclic Jacobi eigendecomposition. Deterministic for fixed input;
// off-diagonal threshold 1e-12 * ||A||_F, sweep cap 100.
inline Spectrum spectrum(const Matrix &m, int sweep_cap = 100) {
    if (!m.is_symmetric(1e-12 * (1.0 + m.frobenius_norm())))
        throw std::invalid_argument("spectrum: matrix not symmetric");
    Matrix a = m;
    Matrix v = Matrix::identity(m.n());
    detail::jacobi_run(a, &v, sweep_cap);

    const int n = m.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a.at(x, x) < a.at(y, y); });

    Spectrum out;
    out.values.resize(n);
    out.vectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = a.at(order[k], order[k]);
        for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
        detail::fix_sign(out.vectors, k);
    }
    return out;
}

// Eigenvalues only (no accumulation of rotations); ascending.
inline Vector eigenvalues(const Matrix &m, int sweep_cap = 100) {
    Matrix a = m;
    detail::jacobi_run(a, nullptr, sweep_cap);
    Vector vals(m.n());
    for (int i = 0; i < m.n(); ++i) vals[i] = a.at(i, i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace spectral
