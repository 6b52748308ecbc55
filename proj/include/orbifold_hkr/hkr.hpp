#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biseries.hpp"
#include "combinatorics.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "linalg.hpp"

// HKR decomposition of Hochschild (co)homology of [𝔸ⁿ/G] into twisted-sector contributions.
//
// Homology, sector [g]:   (Sym V^{g∨} ⊗ Λ^p V^{g∨})^{Z(g)},          row p,       t = weight (dx has weight 1)
// Cohomology, sector [g]: (Sym V^{g∨} ⊗ Λ^p V^g ⊗ det N_g)^{Z(g)},  row p + c_g, t = polynomial degree s
//
// For cohomology the weight of a cell is s − (row), since each ∂/∂x and each normal direction
// in det N_g has weight −1.

namespace orbifold_hkr {

enum class Mode { homology, cohomology };

inline const char* to_string(Mode m) { return m == Mode::homology ? "homology" : "cohomology"; }

namespace detail {

/// (1/|Z(g)|) Σ_h term(h), evaluated in ℚ(ζ_m) and brought back to ℚ.
template <class Term>
BiSeries molien_average(const Sector& sector, std::size_t t_max, Term&& term) {
    BasicBiSeries<Cyclotomic> sum(0, t_max);
    for (std::size_t k = 0; k < sector.cls.centralizer.size(); ++k) {
        sum += term(k);
    }
    const Cyclotomic scale = Cyclotomic(Rational(1, static_cast<long>(sector.centralizer_order())));
    return (sum * scale).map<Rational>([](const Cyclotomic& z) { return z.to_rational(); });
}

} // namespace detail

/// Molien sum (1/|Z(g)|) Σ_h det(I + u·t·A_h⁻¹) / det(I − t·A_h⁻¹), A_h = h restricted to V^g.
inline BiSeries sector_hh_series(const Sector& sector, std::size_t t_max) {
    return detail::molien_average(sector, t_max, [&](std::size_t k) {
        // both factors live on the dual V^{g∨}, where h acts through A_h⁻¹ (transposed)
        const auto dual = embed_matrix(inverse(sector.restricted_action[k]), sector.conductor);
        const auto forms = det_series_factor(dual, Sign::plus, Marker::u_t, FactorKind::numerator, t_max);
        const auto functions = det_series_factor(dual, Sign::minus, Marker::t, FactorKind::reciprocal, t_max);
        return forms * functions;
    });
}

/// Twisted Molien sum (1/|Z(g)|) Σ_h det(h|N_g) · det(I + u·A_h) / det(I − t·A_h⁻¹), shifted
/// by u^{c_g}. Row index is the Hochschild cohomological degree, t counts polynomial degree.
inline BiSeries sector_hhcoh_series(const Sector& sector, std::size_t t_max) {
    const BiSeries unshifted = detail::molien_average(sector, t_max, [&](std::size_t k) {
        const auto& a = sector.restricted_action[k];
        const auto polyvectors = det_series_factor(embed_matrix(a, sector.conductor), Sign::plus, Marker::u,
                                                   FactorKind::numerator, t_max);
        const auto functions = det_series_factor(embed_matrix(inverse(a), sector.conductor), Sign::minus, Marker::t,
                                                 FactorKind::reciprocal, t_max);
        return polyvectors * functions * sector.det_normal_char[k];
    });
    return unshifted.shift_u(sector.normal_codim);
}

enum class OracleMode { forms, polyvectors_twisted };

namespace detail {

/// Leibniz expansion; the oracle keeps its own determinant.
inline Rational leibniz_minor(const RationalMatrix& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) {
        perm[i] = i;
    }
    Rational total(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                if (perm[i] > perm[j]) {
                    ++inversions;
                }
            }
        }
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < k && !term.is_zero(); ++i) {
            term *= m(rows[i], cols[perm[i]]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

using SparsePoly = std::map<Exponents, Rational>;

inline SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            out[e] += ca * cb;
        }
    }
    return out;
}

/// Matrix of h on Sym^s of the coordinate functions, where h·x_i = Σ_j inv(i, j) x_j.
inline RationalMatrix sym_action(const RationalMatrix& inv, const std::vector<Exponents>& basis) {
    const std::size_t f = inv.rows();
    std::vector<SparsePoly> images(f);
    for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = 0; j < f; ++j) {
            if (!inv(i, j).is_zero()) {
                Exponents e(f, 0);
                e[j] = 1;
                images[i][e] = inv(i, j);
            }
        }
    }
    const auto idx = index_of(basis);
    RationalMatrix out(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        SparsePoly poly{{Exponents(f, 0), Rational(1)}};
        for (std::size_t i = 0; i < f; ++i) {
            for (unsigned k = 0; k < basis[c][i]; ++k) {
                poly = multiply(poly, images[i]);
            }
        }
        for (const auto& [e, coeff] : poly) {
            if (!coeff.is_zero()) {
                out(idx.at(e), c) = coeff;
            }
        }
    }
    return out;
}

/// A⁻¹ as a power of A (A has finite order), avoiding elimination.
inline RationalMatrix inverse_by_powers(const RationalMatrix& a) {
    const auto id = RationalMatrix::identity(a.rows());
    RationalMatrix previous = id;
    RationalMatrix power = a;
    while (!(power == id)) {
        previous = power;
        power = power * a;
    }
    return previous;
}

} // namespace detail

/// Dimension of the Z(g)-invariants in bidegree (p, d), computed as the rank of the averaging
/// projector on an explicit monomial ⊗ exterior basis.
///
/// forms:               Sym^{d−p}(V^{g∨}) ⊗ Λ^p(V^{g∨}), d = total weight.
/// polyvectors_twisted: Sym^d(V^{g∨}) ⊗ Λ^p(V^g) ⊗ det N_g, d = polynomial degree.
inline std::uint64_t oracle_basis_size(const Sector& sector, std::size_t p, std::size_t d, OracleMode mode) {
    const std::size_t f = sector.fixed_dim;
    if (p > f || (mode == OracleMode::forms && d < p)) {
        return 0;
    }
    return sym_dimension(f, mode == OracleMode::forms ? d - p : d) * binomial(f, p);
}

inline std::size_t brute_force_invariants(const Sector& sector, std::size_t p, std::size_t d, OracleMode mode,
                                          std::size_t basis_cap = default_basis_cap) {
    const std::size_t f = sector.fixed_dim;
    if (p > f || (mode == OracleMode::forms && d < p)) {
        return 0;
    }
    const std::size_t s = mode == OracleMode::forms ? d - p : d;
    const std::uint64_t size = oracle_basis_size(sector, p, d, mode);
    if (size > basis_cap) {
        throw BasisTooLarge("invariant basis of size " + std::to_string(size) + " exceeds cap");
    }
    const auto monos = monomials_of_degree(f, s);
    const auto sets = subsets_of_size(f, p);
    const std::size_t N = monos.size() * sets.size();
    RationalMatrix projector(N, N);
    for (std::size_t k = 0; k < sector.cls.centralizer.size(); ++k) {
        const RationalMatrix& a = sector.restricted_action[k];
        const RationalMatrix inv = detail::inverse_by_powers(a);
        const RationalMatrix sym = detail::sym_action(inv, monos);
        RationalMatrix ext(sets.size(), sets.size());
        for (std::size_t J = 0; J < sets.size(); ++J) {
            for (std::size_t I = 0; I < sets.size(); ++I) {
                // forms: h·dx_I = Σ_J det(inv[I, J]) dx_J; polyvectors: h·∂_I = Σ_J det(a[J, I]) ∂_J
                ext(J, I) = mode == OracleMode::forms ? detail::leibniz_minor(inv, sets[I], sets[J])
                                                      : detail::leibniz_minor(a, sets[J], sets[I]);
            }
        }
        const Rational twist =
            mode == OracleMode::polyvectors_twisted ? sector.det_normal_char[k].to_rational() : Rational(1);
        for (std::size_t r1 = 0; r1 < monos.size(); ++r1) {
            for (std::size_t c1 = 0; c1 < monos.size(); ++c1) {
                const Rational& x = sym(r1, c1);
                if (x.is_zero()) {
                    continue;
                }
                for (std::size_t r2 = 0; r2 < sets.size(); ++r2) {
                    for (std::size_t c2 = 0; c2 < sets.size(); ++c2) {
                        const Rational& y = ext(r2, c2);
                        if (!y.is_zero()) {
                            projector(r1 * sets.size() + r2, c1 * sets.size() + c2) += x * y * twist;
                        }
                    }
                }
            }
        }
    }
    projector *= Rational(1, static_cast<long>(sector.centralizer_order()));
    return rank(projector);
}

struct Conventions {
    std::string u_marker;
    std::string t_marker;
    std::string row_index;
};

inline Conventions conventions_for(Mode mode) {
    if (mode == Mode::homology) {
        return {"form degree p (HH_p)", "weight, coordinates and dx_i in weight 1", "p"};
    }
    return {"polyvector degree p shifted by c_g (HH^{p+c_g})",
            "polynomial degree s; weight = s - row (d/dx_i and det N_g directions in weight -1)", "p + c_g"};
}

struct SectorSeries {
    Sector sector;
    BiSeries series;
};

struct HHReport {
    Mode mode = Mode::homology;
    std::size_t t_max = 0;
    std::size_t ambient_dim = 0;
    std::vector<SectorSeries> sectors;
    BiSeries total;
    Conventions conventions;
};

inline BiSeries sector_series(const Sector& sector, std::size_t t_max, Mode mode) {
    return mode == Mode::homology ? sector_hh_series(sector, t_max) : sector_hhcoh_series(sector, t_max);
}

inline HHReport assemble_report(std::vector<Sector> sectors, std::size_t ambient_dim, std::size_t t_max, Mode mode) {
    HHReport report;
    report.mode = mode;
    report.t_max = t_max;
    report.ambient_dim = ambient_dim;
    report.conventions = conventions_for(mode);
    report.total = BiSeries(ambient_dim, t_max);
    for (auto& sector : sectors) {
        BiSeries series = sector_series(sector, t_max, mode).with_u_max(ambient_dim);
        for (std::size_t p = 0; p <= series.u_max(); ++p) {
            for (std::size_t d = 0; d <= t_max; ++d) {
                const Rational& c = series.at(p, d);
                if (c.sign() < 0 || !c.is_integer()) {
                    throw InternalError("Molien coefficient " + c.str() + " is not a dimension");
                }
            }
        }
        report.total += series;
        report.sectors.push_back({std::move(sector), std::move(series)});
    }
    return report;
}

inline HHReport full_report(const MatrixGroup& G, std::size_t t_max, Mode mode) {
    return assemble_report(build_sectors(G, conjugacy_classes(G)), G.ambient_dim(), t_max, mode);
}

struct OracleCell {
    std::size_t sector = 0; // index into HHReport::sectors
    std::size_t row = 0;
    std::size_t d = 0;
    Rational molien;
    std::size_t oracle = 0;
};

struct OracleVerdict {
    bool checked = false;
    bool agreement = true;
    std::optional<OracleCell> first_disagreement;
    std::size_t cells = 0;
};

/// Compares every reported cell with d ≤ d_max against brute_force_invariants.
inline OracleVerdict check_against_oracle(const HHReport& report, std::size_t d_max,
                                          std::size_t basis_cap = default_basis_cap) {
    OracleVerdict verdict;
    verdict.checked = true;
    const std::size_t top = std::min(d_max, report.t_max);
    // refuse up front rather than after hours of rank computations on smaller cells
    const OracleMode oracle_mode = report.mode == Mode::homology ? OracleMode::forms : OracleMode::polyvectors_twisted;
    for (const auto& [sector, series] : report.sectors) {
        for (std::size_t p = 0; p <= sector.fixed_dim; ++p) {
            if (oracle_basis_size(sector, p, top, oracle_mode) > basis_cap) {
                throw BasisTooLarge("oracle basis at row " + std::to_string(p) + ", weight " + std::to_string(top) +
                                    " exceeds cap " + std::to_string(basis_cap));
            }
        }
    }
    for (std::size_t k = 0; k < report.sectors.size(); ++k) {
        const auto& [sector, series] = report.sectors[k];
        for (std::size_t row = 0; row <= series.u_max(); ++row) {
            for (std::size_t d = 0; d <= top; ++d) {
                std::size_t expected = 0;
                if (report.mode == Mode::homology) {
                    expected = brute_force_invariants(sector, row, d, OracleMode::forms, basis_cap);
                } else if (row >= sector.normal_codim) {
                    expected = brute_force_invariants(sector, row - sector.normal_codim, d,
                                                      OracleMode::polyvectors_twisted, basis_cap);
                }
                ++verdict.cells;
                if (!(series.at(row, d) == Rational(static_cast<long>(expected)))) {
                    verdict.agreement = false;
                    if (!verdict.first_disagreement) {
                        verdict.first_disagreement = OracleCell{k, row, d, series.at(row, d), expected};
                    }
                }
            }
        }
    }
    return verdict;
}

} // namespace orbifold_hkr
