// elimination.hpp
// Exact Gauss-Jordan elimination: rank, null space, inverse, linear solve,
// and a fraction-free (Bareiss) determinant.

#pragma once

#include "frobalg/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace frobalg {

struct EchelonForm {
    Matrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivot choice is the first nonzero entry in the
/// column, so the output is a pure function of the input.
inline EchelonForm row_reduce(Matrix a) {
    EchelonForm out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Scalar inv = Scalar(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (a(r, j).is_zero()) continue;
                a(i, j) -= f * a(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

inline std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

/// Basis of {x : a x = 0}; one vector per free column, with that free
/// coordinate set to 1.
inline std::vector<std::vector<Scalar>> null_space(const Matrix& a) {
    const EchelonForm ef = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ef.pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct SingularReport {
    std::size_t rank = 0;
    std::vector<std::vector<Scalar>> null_basis;
};

/// Exact inverse of a square matrix, or the rank defect with a kernel basis.
inline std::variant<Matrix, SingularReport> solve_or_invert(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("solve_or_invert: matrix is not square");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm ef = row_reduce(std::move(aug));
    std::size_t left_rank = 0;
    for (auto c : ef.pivots)
        if (c < n) ++left_rank;
    if (left_rank < n) return SingularReport{left_rank, null_space(a)};

    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
    return inv;
}

inline std::optional<Matrix> try_inverse(const Matrix& a) {
    auto r = solve_or_invert(a);
    if (auto* m = std::get_if<Matrix>(&r)) return std::move(*m);
    return std::nullopt;
}

/// Throws std::domain_error on singular input.
inline Matrix inverse(const Matrix& a) {
    auto r = solve_or_invert(a);
    if (auto* m = std::get_if<Matrix>(&r)) return std::move(*m);
    throw std::domain_error("inverse: matrix is singular (rank " +
                            std::to_string(std::get<SingularReport>(r).rank) + ")");
}

/// One solution of a x = b (b may have several columns), or nullopt when the
/// system is inconsistent. Free variables are set to zero.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Matrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    const EchelonForm ef = row_reduce(std::move(aug));
    for (auto c : ef.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < ef.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(ef.pivots[r], j) = ef.reduced(r, a.cols() + j);
    return x;
}

/// Fraction-free Bareiss determinant.
inline Scalar determinant(Matrix a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Scalar prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign < 0 ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

} // namespace frobalg
