#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

// Exact Gaussian elimination over a field F (Rational or Cyclotomic).

namespace orbifold_hkr {

template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form; pivots are scaled to one.
template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) {
                continue;
            }
            const F factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) -= factor * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return row_reduce(m).rank();
}

/// Basis of the right null space, returned as the columns of a cols × k matrix.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_columns) {
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    Matrix<F> basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = F(1);
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
            basis(ech.pivot_columns[i], k) = -ech.reduced(i, fc);
        }
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    if (!m.is_square()) {
        throw NonSquareMatrix("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) {
            ++p;
        }
        if (p == n) {
            return F(0);
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
            }
            det = -det;
        }
        det *= m(c, c);
        const F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) {
                continue;
            }
            const F factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) {
                m(i, j) -= factor * m(c, j);
            }
        }
    }
    return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) {
        throw NonSquareMatrix("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = F(1);
    }
    auto ech = row_reduce(std::move(aug));
    if (ech.rank() < n || (n > 0 && ech.pivot_columns[n - 1] != n - 1)) {
        throw NotInvertible("matrix is singular");
    }
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = ech.reduced(i, n + j);
        }
    }
    return inv;
}

/// Columns of `basis` extended by standard vectors to a basis of the ambient space.
/// Returns the chosen complement as columns; the standard vectors are picked greedily
/// in index order.
template <class F>
Matrix<F> standard_complement(const Matrix<F>& basis) {
    const std::size_t n = basis.rows();
    std::vector<std::size_t> chosen;
    Matrix<F> current = basis;
    std::size_t current_rank = rank(current.transpose());
    for (std::size_t e = 0; e < n && current_rank < n; ++e) {
        Matrix<F> trial(n, current.cols() + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < current.cols(); ++j) {
                trial(i, j) = current(i, j);
            }
        }
        trial(e, current.cols()) = F(1);
        const std::size_t r = rank(trial.transpose());
        if (r > current_rank) {
            current = std::move(trial);
            current_rank = r;
            chosen.push_back(e);
        }
    }
    Matrix<F> comp(n, chosen.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        comp(chosen[k], k) = F(1);
    }
    return comp;
}

/// Horizontal concatenation [a | b].
template <class F>
Matrix<F> hconcat(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hconcat row mismatch");
    }
    Matrix<F> out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(i, a.cols() + j) = b(i, j);
        }
    }
    return out;
}

/// Block form of P⁻¹ h P for P = [basis | complement]; throws if h does not preserve the span
/// of `basis`.
template <class F>
struct BlockAction {
    Matrix<F> on_subspace;
    Matrix<F> on_quotient;
};

template <class F>
BlockAction<F> block_action(const Matrix<F>& h, const Matrix<F>& basis, const Matrix<F>& complement) {
    const Matrix<F> p = hconcat(basis, complement);
    const Matrix<F> m = inverse(p) * h * p;
    const std::size_t f = basis.cols();
    const std::size_t n = p.cols();
    BlockAction<F> out{Matrix<F>(f, f), Matrix<F>(n - f, n - f)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i >= f && j < f) {
                if (!is_zero(m(i, j))) {
                    throw InternalError("map does not preserve the subspace");
                }
            } else if (i < f && j < f) {
                out.on_subspace(i, j) = m(i, j);
            } else if (i >= f && j >= f) {
                out.on_quotient(i - f, j - f) = m(i, j);
            }
        }
    }
    return out;
}

} // namespace orbifold_hkr
