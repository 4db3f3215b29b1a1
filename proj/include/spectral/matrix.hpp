#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace spectral {

using Vector = std::vector<double>;

// Dense square matrix, row-major. Sized for n <= 64 node problems.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int n() const { return n_; }
    double &at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    double *row(int i) { return a_.data() + static_cast<size_t>(i) * n_; }
    const double *row(int i) const { return a_.data() + static_cast<size_t>(i) * n_; }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    Vector column(int j) const {
        Vector c(n_);
        for (int i = 0; i < n_; ++i) c[i] = at(i, j);
        return c;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    bool is_symmetric(double tol) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (std::abs(at(i, j) - at(j, i)) > tol) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline double dot(const Vector &a, const Vector &b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vector &a) { return std::sqrt(dot(a, a)); }

inline Vector matvec(const Matrix &m, const Vector &v) {
    Vector r(m.n(), 0.0);
    for (int i = 0; i < m.n(); ++i) {
        const double *row = m.row(i);
        double s = 0.0;
        for (int j = 0; j < m.n(); ++j) s += row[j] * v[j];
        r[i] = s;
    }
    return r;
}

// v' M v for symmetric M.
inline double quadratic_form(const Matrix &m, const Vector &v) {
    return dot(v, matvec(m, v));
}

} // namespace spectral
