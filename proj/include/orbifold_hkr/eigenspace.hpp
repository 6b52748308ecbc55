#pragma once

#include <cstddef>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace orbifold_hkr {

inline constexpr std::size_t default_cap = 100000;

/// Multiplicative order of a square rational matrix; OrderCapExceeded past `cap`.
inline std::size_t matrix_order(const RationalMatrix& g, std::size_t cap = default_cap) {
    if (!g.is_square()) {
        throw NonSquareMatrix("order of a non-square matrix");
    }
    const auto id = RationalMatrix::identity(g.rows());
    RationalMatrix power = g;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (power == id) {
            return k;
        }
        power = power * g;
    }
    throw OrderCapExceeded("matrix order exceeds cap " + std::to_string(cap) + " (infinite order?)");
}

/// Basis (as columns) of ker(g − ζ·I) over ℚ(ζ_m), m = conductor of ζ.
inline CyclotomicMatrix eigenspace(const RationalMatrix& g, const Cyclotomic& zeta, std::size_t cap = default_cap) {
    matrix_order(g, cap);
    const unsigned m = zeta.conductor();
    CyclotomicMatrix a = embed_matrix(g, m);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        a(i, i) -= zeta;
    }
    return kernel(a);
}

} // namespace orbifold_hkr
