#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "smith.hpp"

// Chain-level models for Γ_r (cofiber of the degree-r map S¹ → S¹) and its C_r-cover.
// Below them, the fibers of the filtered circle built from A_n = k[x_1..x_n]/(x_i x_j, i < j).

namespace orbifold_hkr {

/// Integral homology group ℤ^free ⊕ ⊕ ℤ/d_i.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion; // each > 1, d_i | d_{i+1}

    std::string str() const {
        std::string out;
        if (free_rank == 1) {
            out = "Z";
        } else if (free_rank > 1) {
            out = "Z^" + std::to_string(free_rank);
        }
        for (const auto& d : torsion) {
            out += (out.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Finite chain complex C_top → … → C_0 of free abelian groups.
class ChainComplex {
public:
    /// differentials[k − 1] is d_k : C_k → C_{k−1}, a rank(C_{k−1}) × rank(C_k) matrix.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
        : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
        if (ranks_.empty() || differentials_.size() + 1 != ranks_.size()) {
            throw std::invalid_argument("chain complex needs one differential per positive degree");
        }
        for (std::size_t k = 1; k < ranks_.size(); ++k) {
            const auto& d = differentials_[k - 1];
            if (d.rows() != ranks_[k - 1] || d.cols() != ranks_[k]) {
                throw std::invalid_argument("differential d_" + std::to_string(k) + " has the wrong shape");
            }
        }
        for (std::size_t k = 2; k < ranks_.size(); ++k) {
            const IntMatrix composite = differentials_[k - 2] * differentials_[k - 1];
            for (const auto& x : composite.data()) {
                if (sgn(x) != 0) {
                    throw InternalError("d_" + std::to_string(k - 1) + " ∘ d_" + std::to_string(k) + " ≠ 0");
                }
            }
        }
    }

    std::size_t top_degree() const noexcept { return ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    const IntMatrix& differential(std::size_t k) const { return differentials_.at(k - 1); }

    HomologyGroup homology(std::size_t k) const {
        if (k > top_degree()) {
            return {};
        }
        const std::size_t out_rank = k == 0 ? 0 : smith_normal_form(differential(k)).size();
        HomologyGroup h;
        std::size_t in_rank = 0;
        if (k < top_degree()) {
            const auto factors = smith_normal_form(differential(k + 1));
            in_rank = factors.size();
            for (const auto& d : factors) {
                if (d > 1) {
                    h.torsion.push_back(d);
                }
            }
        }
        h.free_rank = ranks_[k] - out_rank - in_rank;
        return h;
    }

    long euler_characteristic_from_cells() const {
        long chi = 0;
        for (std::size_t k = 0; k < ranks_.size(); ++k) {
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(ranks_[k]);
        }
        return chi;
    }

    long euler_characteristic_from_homology() const {
        long chi = 0;
        for (std::size_t k = 0; k <= top_degree(); ++k) {
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(homology(k).free_rank);
        }
        return chi;
    }

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> differentials_;
};

/// Γ_r: one 0-cell, one 1-cell (a loop), one 2-cell attached by the degree-r map.
inline ChainComplex gamma_complex(std::size_t r) {
    if (r < 2) {
        throw InputError("Γ_r requires r ≥ 2");
    }
    IntMatrix d1(1, 1);
    IntMatrix d2(1, 1);
    d2(0, 0) = Integer(static_cast<unsigned long>(r));
    return ChainComplex({1, 1, 1}, {d1, d2});
}

/// B_r: one circle with r disks, each attached once along it.
inline ChainComplex cover_complex(std::size_t r) {
    if (r < 2) {
        throw InputError("B_r requires r ≥ 2");
    }
    IntMatrix d1(1, 1);
    IntMatrix d2(1, r, Integer(1));
    return ChainComplex({1, 1, r}, {d1, d2});
}

inline std::array<HomologyGroup, 3> gamma_homology(std::size_t r) {
    const auto c = gamma_complex(r);
    return {c.homology(0), c.homology(1), c.homology(2)};
}

inline std::array<HomologyGroup, 3> cover_homology(std::size_t r) {
    const auto c = cover_complex(r);
    return {c.homology(0), c.homology(1), c.homology(2)};
}

/// A_n with its weight grading: weight 0 spanned by 1, weight d ≥ 1 by x_1^d, …, x_n^d.
///
/// Elements of weight ≤ D are coordinate vectors in the basis 1, x_1, …, x_n, x_1², …, x_n^D.
class GradedAlgebraAn {
public:
    explicit GradedAlgebraAn(std::size_t n) : n_(n) {
        if (n == 0) {
            throw InputError("A_n requires n ≥ 1");
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t weight_dimension(std::size_t d) const noexcept { return d == 0 ? 1 : n_; }
    std::size_t truncated_dimension(std::size_t max_weight) const noexcept { return 1 + n_ * max_weight; }

    /// Index of x_i^d (i is 0-based), or of 1 when d = 0.
    std::size_t index(std::size_t i, std::size_t d) const noexcept { return d == 0 ? 0 : 1 + (d - 1) * n_ + i; }

    /// Coefficient-free product of basis monomials x_i^a · x_j^b; nullopt when it vanishes.
    struct Monomial {
        std::size_t var = 0;
        std::size_t degree = 0;
    };
    std::optional<Monomial> multiply(Monomial a, Monomial b) const {
        if (a.degree == 0) {
            return b;
        }
        if (b.degree == 0) {
            return a;
        }
        if (a.var != b.var) {
            return std::nullopt;
        }
        return Monomial{a.var, a.degree + b.degree};
    }

    /// Matrix of multiplication by (c + Σ_i coeffs[i]·x_i) from weight ≤ D into weight ≤ D + 1.
    RationalMatrix multiplication_by_linear(const Rational& c, const std::vector<Rational>& coeffs,
                                            std::size_t max_weight) const {
        const std::size_t src = truncated_dimension(max_weight);
        const std::size_t dst = truncated_dimension(max_weight + 1);
        RationalMatrix m(dst, src);
        auto basis = [&](std::size_t idx) {
            return idx == 0 ? Monomial{0, 0} : Monomial{(idx - 1) % n_, (idx - 1) / n_ + 1};
        };
        for (std::size_t col = 0; col < src; ++col) {
            const Monomial b = basis(col);
            m(col, col) += c;
            for (std::size_t i = 0; i < n_; ++i) {
                if (coeffs[i].is_zero()) {
                    continue;
                }
                if (auto prod = multiply(Monomial{i, 1}, b)) {
                    m(index(prod->var, prod->degree), col) += coeffs[i];
                }
            }
        }
        return m;
    }

private:
    std::size_t n_;
};

/// dim_k of A_n / (x_1 + … + x_n − c) with c = 0 (central fiber) or c = 1 (a generic fiber).
///
/// The sum s = Σx_i is a nonzerodivisor whose leading form generates the grading filtration,
/// so the quotient is the cokernel of multiplication by s − c from weight ≤ 2 into weight ≤ 3.
inline std::size_t fiber_dimension(std::size_t n, bool at_zero) {
    const GradedAlgebraAn algebra(n);
    constexpr std::size_t max_weight = 2;
    const std::vector<Rational> ones(n, Rational(1));
    const Rational c = at_zero ? Rational(0) : Rational(-1);
    const auto m = algebra.multiplication_by_linear(c, ones, max_weight);
    return algebra.truncated_dimension(max_weight + 1) - rank(m);
}

struct CentralComplexResult {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    bool trivial_action = false;
    /// trace of σ^j on H⁰ ⊕ H¹, j = 0, …, n−1
    std::vector<Rational> character;
};

namespace detail {

/// Matrix of `map` restricted to the column span of `basis` (assumed invariant), in that basis.
inline RationalMatrix restrict_to(const RationalMatrix& map, const RationalMatrix& basis) {
    const auto image = map * basis;
    const auto ech = row_reduce(hconcat(basis, image));
    if (ech.rank() != basis.cols() || (basis.cols() > 0 && ech.pivot_columns.back() >= basis.cols())) {
        throw InternalError("subspace is not invariant");
    }
    RationalMatrix out(basis.cols(), basis.cols());
    for (std::size_t i = 0; i < basis.cols(); ++i) {
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            out(i, j) = ech.reduced(i, basis.cols() + j);
        }
    }
    return out;
}

inline Rational trace(const RationalMatrix& m) {
    Rational t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

} // namespace detail

/// The two-term complex L = [k^{n+1}/k·(0,1,…,1) → k^n], (a_0, …, a_n) ↦ (a_1 − a_2, …, a_n − a_1),
/// with C_n permuting a_1, …, a_n and the target summands cyclically.
inline CentralComplexResult central_complex(std::size_t n) {
    if (n < 2) {
        throw InputError("central complex requires n ≥ 2");
    }
    RationalMatrix diff(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        diff(i, 1 + i) += Rational(1);
        diff(i, 1 + (i + 1) % n) -= Rational(1);
    }
    RationalMatrix line(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) {
        line(i, 0) = Rational(1);
    }
    // σ: a_i ↦ position i+1 (cyclically); a_0 fixed
    RationalMatrix sigma_src(n + 1, n + 1);
    sigma_src(0, 0) = Rational(1);
    RationalMatrix sigma_tgt(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        sigma_src(1 + (i + 1) % n, 1 + i) = Rational(1);
        sigma_tgt((i + 1) % n, i) = Rational(1);
    }
    if (!(diff * sigma_src == sigma_tgt * diff)) {
        throw InternalError("central complex differential is not C_n-equivariant");
    }
    if (!(diff * line == RationalMatrix(n, 1))) {
        throw InternalError("differential does not vanish on the quotiented line");
    }

    // H⁰ = ker(diff) / line,  H¹ = k^n / im(diff)
    const RationalMatrix ker = kernel(diff);
    const RationalMatrix ker_action = detail::restrict_to(sigma_src, ker);
    // coordinates of `line` in the kernel basis
    const auto coords = row_reduce(hconcat(ker, line));
    RationalMatrix line_coords(ker.cols(), 1);
    for (std::size_t i = 0; i < ker.cols(); ++i) {
        line_coords(i, 0) = coords.reduced(i, ker.cols());
    }
    const RationalMatrix h0_action =
        block_action(ker_action, line_coords, standard_complement(line_coords)).on_quotient;

    const RationalMatrix image_basis = [&] {
        const auto ech = row_reduce(diff);
        RationalMatrix b(n, ech.rank());
        for (std::size_t k = 0; k < ech.rank(); ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                b(i, k) = diff(i, ech.pivot_columns[k]);
            }
        }
        return b;
    }();
    const RationalMatrix h1_action =
        block_action(sigma_tgt, image_basis, standard_complement(image_basis)).on_quotient;

    CentralComplexResult result;
    result.h0 = h0_action.rows();
    result.h1 = h1_action.rows();
    result.trivial_action = h0_action == RationalMatrix::identity(result.h0) &&
                            h1_action == RationalMatrix::identity(result.h1);
    RationalMatrix p0 = RationalMatrix::identity(result.h0);
    RationalMatrix p1 = RationalMatrix::identity(result.h1);
    for (std::size_t j = 0; j < n; ++j) {
        result.character.push_back(detail::trace(p0) + detail::trace(p1));
        p0 = p0 * h0_action;
        p1 = p1 * h1_action;
    }
    return result;
}

struct GraphHomology {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
};

/// Homotopy colimit of n points → n copies of (n−1) points along the t ≠ 0 specialization of
/// f_s: x_1 ↦ x_s + x_{s+1}, x_i ↦ x_{s+i}, modelled as the mapping-cylinder graph.
inline GraphHomology generic_fiber_homology(std::size_t n) {
    if (n < 2) {
        throw InputError("generic fiber requires n ≥ 2");
    }
    const std::size_t targets = n - 1;
    const std::size_t vertices = n + n * targets;
    const std::size_t edges = n * n;
    IntMatrix boundary(vertices, edges);
    for (std::size_t s = 0; s < n; ++s) {
        // pullback of target coordinate y_i as a 0/1 row over the source coordinates
        RationalMatrix pullback(targets, n);
        pullback(0, s) = Rational(1);
        pullback(0, (s + 1) % n) = Rational(1);
        for (std::size_t i = 1; i < targets; ++i) {
            pullback(i, (s + i + 1) % n) = Rational(1);
        }
        for (std::size_t j = 0; j < n; ++j) {
            // source point j has x_j = t, other coordinates 0; take t = 1
            std::size_t image = targets;
            for (std::size_t i = 0; i < targets; ++i) {
                if (!pullback(i, j).is_zero()) {
                    if (image != targets) {
                        throw InternalError("point maps off the coordinate axes");
                    }
                    image = i;
                }
            }
            if (image == targets) {
                throw InternalError("point maps to the origin");
            }
            const std::size_t edge = s * n + j;
            boundary(j, edge) -= 1;
            boundary(n + s * targets + image, edge) += 1;
        }
    }
    const ChainComplex graph({vertices, edges}, {boundary});
    return {graph.homology(0).free_rank, graph.homology(1).free_rank};
}

} // namespace orbifold_hkr
