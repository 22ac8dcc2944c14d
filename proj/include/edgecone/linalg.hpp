#pragma once

// Dense Gaussian elimination over an exact field. The element type only needs
// field operations and comparison with zero; the library instantiates it with
// Rational.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgecone/errors.hpp"
#include "edgecone/rational.hpp"

namespace edgecone::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row echelon form of a matrix together with its pivot columns.
template <class T>
struct Echelon {
    Matrix<T> rows;                  // nonzero rows only, reduced (pivot = 1, zeros above and below)
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }
};

template <class T>
std::size_t common_width(const Matrix<T>& m, std::size_t fallback = 0) {
    if (m.empty()) return fallback;
    const std::size_t w = m.front().size();
    for (const auto& r : m)
        if (r.size() != w) throw DimensionMismatch("rows of different lengths");
    return w;
}

/// Reduced row echelon form by exact elimination.
template <class T>
Echelon<T> echelon(Matrix<T> m, std::size_t cols_if_empty = 0) {
    Echelon<T> e;
    e.cols = common_width(m, cols_if_empty);
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        if (m[r][c] != 1) {
            const T inv = T(1) / m[r][c];
            for (std::size_t k = c; k < e.cols; ++k)
                if (m[r][k] != 0) m[r][k] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const T f = m[i][c];
            for (std::size_t k = c; k < e.cols; ++k)
                if (m[r][k] != 0) m[i][k] -= f * m[r][k];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    // Forward elimination only; cheaper than the reduced form.
    const std::size_t cols = common_width(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const T f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (m[r][k] != 0) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Basis of {x : m x = 0}.
template <class T>
Matrix<T> nullspace(Matrix<T> m, std::size_t cols) {
    auto e = echelon(std::move(m), cols);
    std::vector<bool> is_pivot(e.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix<T> basis;
    for (std::size_t free = 0; free < e.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(e.cols, T(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with a x = b, or nullopt when the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, std::span<const T> b) {
    if (a.size() != b.size()) throw DimensionMismatch("right-hand side length differs from row count");
    const std::size_t cols = common_width(a);
    Matrix<T> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto e = echelon(std::move(aug), cols + 1);
    std::vector<T> x(cols, T(0));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

/// Orthogonal projection of v onto the row space of `basis` (rows linearly independent).
template <class T>
std::vector<T> project_onto_rowspace(const Matrix<T>& basis, std::span<const T> v) {
    const std::size_t k = basis.size();
    if (k == 0) return std::vector<T>(v.size(), T(0));
    Matrix<T> gram(k, std::vector<T>(k, T(0)));
    std::vector<T> rhs(k, T(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (basis[i].size() != v.size()) throw DimensionMismatch("projection onto a space of different dimension");
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < v.size(); ++c) gram[i][j] += basis[i][c] * basis[j][c];
        for (std::size_t c = 0; c < v.size(); ++c) rhs[i] += basis[i][c] * v[c];
    }
    auto coeffs = solve<T>(gram, rhs);
    if (!coeffs) throw Error("projection basis is not linearly independent");
    std::vector<T> out(v.size(), T(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < v.size(); ++c) out[c] += (*coeffs)[i] * basis[i][c];
    return out;
}

}  // namespace edgecone::linalg

namespace edgecone {

/// Rank over the rationals of a family of equal-length vectors.
inline std::size_t rational_rank(const std::vector<RationalVector>& vectors) {
    return linalg::rank(vectors);
}

}  // namespace edgecone
