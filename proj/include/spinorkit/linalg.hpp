/// @file linalg.hpp
/// @brief Exact dense linear algebra: reduced row echelon form, kernels,
/// subspace intersections, determinants and Pfaffians.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spinorkit/error.hpp"
#include "spinorkit/matrix.hpp"

namespace spinorkit {

template <class F>
struct RowReduction {
    Mat<F> rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

// Deterministic Gauss-Jordan: leftmost pivot column first, topmost available
// row first. The result is the unique RREF, so repeated calls are idempotent.
template <class F>
RowReduction<F> row_reduce(Mat<F> m) {
    RowReduction<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        F inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.rref = std::move(m);
    return out;
}

template <class F>
std::size_t rank_of(const Mat<F>& m) {
    return row_reduce(m).rank;
}

// Basis of the right kernel, one vector per free column, in ascending free
// column order; entry at the free column is 1.
template <class F>
std::vector<Vec<F>> kernel_basis(const Mat<F>& m) {
    auto rr = row_reduce(m);
    const FieldSpec& spec = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec<F> v(m.cols(), zero_of<F>(spec));
        v[fc] = one_of<F>(spec);
        for (std::size_t pr = 0; pr < rr.rank; ++pr) v[rr.pivots[pr]] = -rr.rref(pr, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = b, or nullopt if inconsistent; free variables zero.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& m, const Vec<F>& b) {
    require(b.size() == m.rows(), ErrorCode::DimensionMismatch, "rhs length mismatch");
    Mat<F> aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto rr = row_reduce(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Vec<F> x(m.cols(), zero_of<F>(m.field()));
    for (std::size_t pr = 0; pr < rr.rank; ++pr) x[rr.pivots[pr]] = rr.rref(pr, m.cols());
    return x;
}

template <class F>
F det(Mat<F> m) {
    require(m.is_square(), ErrorCode::BadShape, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    F d = one_of<F>(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return zero_of<F>(m.field());
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            d = -d;
        }
        d *= m(c, c);
        F inv = m(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Canonical basis (RREF rows) of the row span; zero rows dropped.
template <class F>
Mat<F> row_span_basis(const Mat<F>& m) {
    auto rr = row_reduce(m);
    Mat<F> b(rr.rank, m.cols(), m.field());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = rr.rref(i, j);
    return b;
}

template <class F>
bool same_row_span(const Mat<F>& a, const Mat<F>& b) {
    return row_span_basis(a) == row_span_basis(b);
}

template <class F>
bool in_row_span(const Mat<F>& a, const Vec<F>& v) {
    Mat<F> ext = a.stacked(Mat<F>::from_rows({v}, a.field()));
    return rank_of(ext) == rank_of(a);
}

// Basis of span(a) ∩ span(b); rows of each input span the subspaces.
template <class F>
Mat<F> intersect_subspaces(const Mat<F>& a, const Mat<F>& b) {
    require(a.cols() == b.cols(), ErrorCode::DimensionMismatch,
            "subspaces live in different ambient dimensions");
    require(a.field() == b.field(), ErrorCode::FieldMismatch, "subspaces over different fields");
    const FieldSpec& spec = a.field();
    // x = alpha . a = beta . b  <=>  (alpha, beta) in ker [a^T | -b^T]
    Mat<F> sys(a.cols(), a.rows() + b.rows(), spec);
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j < a.rows(); ++j) sys(i, j) = a(j, i);
        for (std::size_t j = 0; j < b.rows(); ++j) sys(i, a.rows() + j) = -b(j, i);
    }
    auto ker = kernel_basis(sys);
    Mat<F> vectors(ker.size(), a.cols(), spec);
    for (std::size_t k = 0; k < ker.size(); ++k)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            F acc = zero_of<F>(spec);
            for (std::size_t j = 0; j < a.rows(); ++j) acc += ker[k][j] * a(j, c);
            vectors(k, c) = acc;
        }
    return row_span_basis(vectors);
}

namespace detail {
template <class F>
F pfaffian_rec(const Mat<F>& m, std::vector<std::size_t>& idx) {
    const FieldSpec& spec = m.field();
    if (idx.empty()) return one_of<F>(spec);
    F acc = zero_of<F>(spec);
    std::size_t i0 = idx[0];
    // Pf = sum_j (-1)^j m[0][j] Pf(minor), 1-based j over the active index list.
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const F& mij = m(i0, idx[j]);
        if (mij.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        F term = mij * pfaffian_rec(m, rest);
        if (j % 2 == 0) acc -= term;  // sign (-1)^(j+1) with j counted from 1
        else acc += term;
    }
    return acc;
}
}  // namespace detail

// Pfaffian of the principal submatrix on `idx`; caller guarantees skewness.
template <class F>
F pfaffian_sub(const Mat<F>& m, std::vector<std::size_t> idx) {
    if (idx.size() % 2 != 0) return zero_of<F>(m.field());
    return detail::pfaffian_rec(m, idx);
}

// Recursive expansion along the first row: Pf([[0,a],[-a,0]]) = a, and the
// 4x4 value is m12 m34 - m13 m24 + m14 m23. Odd sizes give zero.
template <class F>
F pfaffian(const Mat<F>& m) {
    require(m.is_square(), ErrorCode::BadShape, "pfaffian of non-square matrix");
    require(m.is_skew(), ErrorCode::NotSkew, "pfaffian needs a skew-symmetric matrix");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pfaffian_sub(m, std::move(idx));
}

// Component i (1-based) is (-1)^i Pf(m with row and column i deleted).
template <class F>
Vec<F> sub_pfaffian_vector(const Mat<F>& m) {
    require(m.rows() == 5 && m.cols() == 5, ErrorCode::BadShape, "expected a 5x5 matrix");
    require(m.is_skew(), ErrorCode::NotSkew, "sub-Pfaffians need a skew-symmetric matrix");
    Vec<F> out(5, zero_of<F>(m.field()));
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < 5; ++k)
            if (k != i) idx.push_back(k);
        F pf = pfaffian_sub(m, std::move(idx));
        out[i] = (i % 2 == 0) ? -pf : pf;  // (-1)^i with i 1-based
    }
    return out;
}

}  // namespace spinorkit
