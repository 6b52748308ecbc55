#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "linalg.hpp"

namespace orbifold_hkr {

/// Twisted sector of a linear action: one conjugacy class [g] with the fixed subspace V^g,
/// the normal quotient N_g = V / V^g, and the residual action of the centralizer Z(g).
struct Sector {
    ConjClass cls;
    RationalMatrix element;     // g
    RationalMatrix fixed_basis; // n × f_g, columns span ker(g − I)
    RationalMatrix complement;  // n × c_g, columns complete fixed_basis to a basis of V
    std::size_t ambient_dim = 0;
    std::size_t fixed_dim = 0;    // f_g
    std::size_t normal_codim = 0; // c_g
    unsigned conductor = 1;       // group exponent; field of det_normal_char values
    /// Aligned with cls.centralizer.
    std::vector<RationalMatrix> restricted_action; // f_g × f_g matrix of h on V^g
    std::vector<Cyclotomic> det_normal_char;       // det(h on N_g)

    std::size_t centralizer_order() const noexcept { return cls.centralizer.size(); }

    std::size_t slot(ElementId h) const {
        const auto& z = cls.centralizer;
        auto it = std::lower_bound(z.begin(), z.end(), h);
        if (it == z.end() || *it != h) {
            throw std::out_of_range("element is not in the centralizer of the sector");
        }
        return static_cast<std::size_t>(it - z.begin());
    }

    const RationalMatrix& restricted(ElementId h) const { return restricted_action[slot(h)]; }
    const Cyclotomic& det_normal(ElementId h) const { return det_normal_char[slot(h)]; }
};

/// det(h on V / span(basis)), computed through the given complement.
inline Rational normal_determinant(const RationalMatrix& h, const RationalMatrix& basis, const RationalMatrix& complement) {
    return determinant(block_action(h, basis, complement).on_quotient);
}

inline Sector build_sector(const MatrixGroup& G, const ConjClass& cls) {
    Sector s;
    s.cls = cls;
    s.element = G.element(cls.representative);
    s.ambient_dim = G.ambient_dim();
    s.conductor = static_cast<unsigned>(G.exponent());
    const auto n = s.ambient_dim;
    s.fixed_basis = kernel(s.element - RationalMatrix::identity(n));
    s.complement = standard_complement(s.fixed_basis);
    s.fixed_dim = s.fixed_basis.cols();
    s.normal_codim = s.complement.cols();
    if (s.fixed_dim + s.normal_codim != n) {
        throw InternalError("fixed subspace and complement do not span V");
    }
    for (ElementId h : cls.centralizer) {
        auto blocks = block_action(G.element(h), s.fixed_basis, s.complement);
        s.det_normal_char.push_back(Cyclotomic(determinant(blocks.on_quotient)).embed(s.conductor));
        s.restricted_action.push_back(std::move(blocks.on_subspace));
    }
    return s;
}

inline std::vector<Sector> build_sectors(const MatrixGroup& G, const std::vector<ConjClass>& classes) {
    std::vector<Sector> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) {
        out.push_back(build_sector(G, cls));
    }
    return out;
}

/// rows[p][d] = dimension in homological degree p and weight d, 0 ≤ d ≤ t_max.
struct KoszulReport {
    std::vector<std::vector<std::uint64_t>> rows;

    std::uint64_t at(std::size_t p, std::size_t d) const { return p < rows.size() ? rows[p].at(d) : 0; }
    friend bool operator==(const KoszulReport&, const KoszulReport&) = default;
};

inline constexpr std::size_t default_basis_cap = 100000;

namespace detail {

/// Koszul differential K_{p,d} → K_{p−1,d} for the linear forms given by the rows of `forms`.
/// K_{p,d} has basis x^a ⊗ e_I with |I| = p and |a| = d − p.
inline RationalMatrix koszul_differential(const RationalMatrix& forms, std::size_t p, std::size_t d) {
    const std::size_t n = forms.cols();
    const auto src_monos = monomials_of_degree(n, d - p);
    const auto src_sets = subsets_of_size(n, p);
    const auto dst_monos = monomials_of_degree(n, d - p + 1);
    const auto dst_sets = subsets_of_size(n, p - 1);
    const auto dst_mono_idx = index_of(dst_monos);
    const auto dst_set_idx = index_of(dst_sets);
    RationalMatrix dmat(dst_monos.size() * dst_sets.size(), src_monos.size() * src_sets.size());
    for (std::size_t a = 0; a < src_monos.size(); ++a) {
        for (std::size_t s = 0; s < src_sets.size(); ++s) {
            const std::size_t col = a * src_sets.size() + s;
            const auto& I = src_sets[s];
            for (std::size_t pos = 0; pos < I.size(); ++pos) {
                std::vector<std::size_t> rest = I;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                const std::size_t rest_idx = dst_set_idx.at(rest);
                const Rational sign = pos % 2 == 0 ? Rational(1) : Rational(-1);
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& coeff = forms(I[pos], k);
                    if (coeff.is_zero()) {
                        continue;
                    }
                    Exponents e = src_monos[a];
                    ++e[k];
                    const std::size_t row = dst_mono_idx.at(e) * dst_sets.size() + rest_idx;
                    dmat(row, col) += sign * coeff;
                }
            }
        }
    }
    return dmat;
}

} // namespace detail

/// Koszul homology of the n linear forms v ↦ (g − I)v, graded by weight with both the
/// coordinates and the Koszul generators in weight 1: the Hilbert table of Y^{ℝg}.
inline KoszulReport derived_fixed_hilbert(const RationalMatrix& g, std::size_t t_max,
                                          std::size_t basis_cap = default_basis_cap) {
    if (!g.is_square()) {
        throw NonSquareMatrix("derived fixed locus of a non-square matrix");
    }
    const std::size_t n = g.rows();
    const RationalMatrix forms = g - RationalMatrix::identity(n);
    // ranks[p][d] = rank of K_{p,d} → K_{p−1,d}; zero for p = 0 and p > n
    std::vector<std::vector<std::size_t>> ranks(n + 2, std::vector<std::size_t>(t_max + 1, 0));
    for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t d = p; d <= t_max; ++d) {
            const std::uint64_t size = sym_dimension(n, d - p) * binomial(n, p);
            if (size > basis_cap) {
                throw BasisTooLarge("Koszul basis of size " + std::to_string(size) + " exceeds cap");
            }
            ranks[p][d] = rank(detail::koszul_differential(forms, p, d));
        }
    }
    KoszulReport report;
    report.rows.assign(n + 1, std::vector<std::uint64_t>(t_max + 1, 0));
    for (std::size_t p = 0; p <= n; ++p) {
        for (std::size_t d = p; d <= t_max; ++d) {
            const std::uint64_t dim = sym_dimension(n, d - p) * binomial(n, p);
            report.rows[p][d] = dim - ranks[p][d] - ranks[p + 1][d];
        }
    }
    return report;
}

/// Hilbert table of Sym(V^{g∨}) ⊗ Λ^p(V^{g∨}) with dx_i in weight 1: the shifted tangent
/// bundle T[−1]Y^g. Rows run to the ambient dimension so tables compare directly.
inline KoszulReport shifted_tangent_hilbert(const Sector& sector, std::size_t t_max) {
    const std::size_t f = sector.fixed_dim;
    KoszulReport report;
    report.rows.assign(sector.ambient_dim + 1, std::vector<std::uint64_t>(t_max + 1, 0));
    for (std::size_t p = 0; p <= f; ++p) {
        for (std::size_t d = p; d <= t_max; ++d) {
            report.rows[p][d] = binomial(f, p) * sym_dimension(f, d - p);
        }
    }
    return report;
}

} // namespace orbifold_hkr
