#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace orbifold_hkr {

/// Nonzero invariant factors d_1 | d_2 | … | d_r of an integer matrix.
///
/// Plain unimodular row and column operations, pivoting on the entry of least absolute value.
inline std::vector<Integer> smith_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Integer> factors;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a != b) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(m(a, j), m(b, j));
            }
        }
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a != b) {
            for (std::size_t i = 0; i < rows; ++i) {
                std::swap(m(i, a), m(i, b));
            }
        }
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // least nonzero |entry| in the trailing block
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (sgn(m(i, j)) == 0) {
                        continue;
                    }
                    Integer a = ::abs(m(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (!found) {
                return factors;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m(i, t)) == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) {
                    m(i, j) -= q * m(t, j);
                }
                if (sgn(m(i, t)) != 0) {
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m(t, j)) == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) {
                    m(i, j) -= q * m(i, t);
                }
                if (sgn(m(t, j)) != 0) {
                    clean = false;
                }
            }
            if (!clean) {
                continue;
            }
            // divisibility: fold a row holding a non-multiple into the pivot row
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < cols; ++k) {
                            m(t, k) += m(i, k);
                        }
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) {
                break;
            }
        }
        factors.push_back(::abs(m(t, t)));
    }
    return factors;
}

} // namespace orbifold_hkr
