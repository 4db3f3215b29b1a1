#pragma once

#include <stdexcept>
#include <vector>

#include "spectral/matrix.hpp"

namespace spectral {
namespace detail {

// Siamese method for odd n.
inline Matrix magic_odd(int n) {
    Matrix m(n);
    int i = 0, j = n / 2;
    for (int v = 1; v <= n * n; ++v) {
        m.at(i, j) = v;
        const int ni = (i - 1 + n) % n, nj = (j + 1) % n;
        if (m.at(ni, nj) != 0.0) {
            i = (i + 1) % n;
        } else {
            i = ni;
            j = nj;
        }
    }
    return m;
}

// Complement pattern for doubly even n (n = 4k).
inline Matrix magic_doubly_even(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = i * n + j + 1;
            const bool corner_block = (i % 4 == 0 || i % 4 == 3) == (j % 4 == 0 || j % 4 == 3);
            m.at(i, j) = corner_block ? n * n + 1 - v : v;
        }
    return m;
}

// Strachey method for singly even n (n = 4k + 2).
inline Matrix magic_singly_even(int n) {
    const int h = n / 2; // odd
    Matrix o = magic_odd(h);
    Matrix m(n);
    const int sq = h * h;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            m.at(i, j) = o.at(i, j);                  // A (top-left)
            m.at(i + h, j + h) = o.at(i, j) + sq;     // B (bottom-right)
            m.at(i, j + h) = o.at(i, j) + 2 * sq;     // C (top-right)
            m.at(i + h, j) = o.at(i, j) + 3 * sq;     // D (bottom-left)
        }
    const int k = (h - 1) / 2;
    // Swap the left k columns of A and D; the centre row swaps columns
    // 1..k instead of 0..k-1.
    for (int i = 0; i < h; ++i) {
        const int shift = (i == h / 2) ? 1 : 0;
        for (int c = 0; c < k; ++c) {
            const int j = c + shift;
            std::swap(m.at(i, j), m.at(i + h, j));
        }
    }
    // Swap the right k-1 columns of C and B.
    for (int i = 0; i < h; ++i)
        for (int c = 0; c < k - 1; ++c) {
            const int j = n - 1 - c;
            std::swap(m.at(i, j), m.at(i + h, j));
        }
    return m;
}

} // namespace detail

// Classical magic square of order n >= 3: rows, columns and both
// diagonals sum to n(n^2+1)/2 and entries are a permutation of 1..n^2.
inline Matrix magic_square(int n) {
    if (n < 3) throw std::invalid_argument("magic_square: n >= 3 required");
    if (n % 2 == 1) return detail::magic_odd(n);
    if (n % 4 == 0) return detail::magic_doubly_even(n);
    return detail::magic_singly_even(n);
}

} // namespace spectral
