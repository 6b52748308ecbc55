#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace orbifold_hkr;
using fixtures::mat;

namespace {

std::vector<Sector> sectors_of(const fixtures::NamedGroup& g) {
    const auto G = MatrixGroup::generate(g.generators);
    return build_sectors(G, conjugacy_classes(G));
}

} // namespace

TEST(BuildSector, SignGroup) {
    const auto s = sectors_of(fixtures::c2_sign());
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].fixed_dim, 1u);
    EXPECT_EQ(s[0].normal_codim, 0u);
    for (const auto& c : s[0].det_normal_char) {
        EXPECT_EQ(c, Cyclotomic(1));
    }
    EXPECT_EQ(s[1].fixed_dim, 0u);
    EXPECT_EQ(s[1].normal_codim, 1u);
    EXPECT_EQ(s[1].det_normal(0), Cyclotomic(1));
    EXPECT_EQ(s[1].det_normal(1), Cyclotomic(-1));
}

TEST(BuildSector, RotationIsAPointSector) {
    const auto G = MatrixGroup::generate(fixtures::c4_rotation().generators);
    const auto classes = conjugacy_classes(G);
    const ElementId rot = G.id_of(mat({{0, -1}, {1, 0}}));
    for (const auto& c : classes) {
        if (c.representative != rot) {
            continue;
        }
        const auto s = build_sector(G, c);
        EXPECT_EQ(s.fixed_dim, 0u);
        EXPECT_EQ(s.normal_codim, 2u);
        EXPECT_EQ(s.det_normal(rot), Cyclotomic(1));
        return;
    }
    FAIL() << "rotation class not found";
}

class SectorProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SectorProperties, FixedBasisAndCodimension) {
    for (const auto& s : sectors_of(fixtures::all_groups().at(GetParam()))) {
        EXPECT_EQ(s.fixed_dim + s.normal_codim, s.ambient_dim);
        const auto residual = (s.element - RationalMatrix::identity(s.ambient_dim)) * s.fixed_basis;
        EXPECT_EQ(residual, RationalMatrix(s.ambient_dim, s.fixed_dim));
        EXPECT_EQ(rank(s.element - RationalMatrix::identity(s.ambient_dim)), s.normal_codim);
        // g restricted to its own fixed space is the identity
        EXPECT_EQ(s.restricted(s.cls.representative), RationalMatrix::identity(s.fixed_dim));
    }
}

TEST_P(SectorProperties, NormalDeterminantIsAHomomorphism) {
    const auto G = MatrixGroup::generate(fixtures::all_groups().at(GetParam()).generators);
    for (const auto& s : build_sectors(G, conjugacy_classes(G))) {
        for (auto a : s.cls.centralizer) {
            for (auto b : s.cls.centralizer) {
                EXPECT_EQ(s.det_normal(G.multiply(a, b)), s.det_normal(a) * s.det_normal(b));
                EXPECT_EQ(s.restricted(G.multiply(a, b)), s.restricted(a) * s.restricted(b));
            }
        }
    }
}

TEST_P(SectorProperties, NormalDeterminantIgnoresComplement) {
    const auto G = MatrixGroup::generate(fixtures::all_groups().at(GetParam()).generators);
    std::mt19937 rng(31 + GetParam());
    for (const auto& s : build_sectors(G, conjugacy_classes(G))) {
        // perturb the complement by random multiples of the fixed basis and a random invertible mix
        for (int trial = 0; trial < 5; ++trial) {
            RationalMatrix shift(s.fixed_dim, s.normal_codim);
            for (std::size_t i = 0; i < shift.rows(); ++i) {
                for (std::size_t j = 0; j < shift.cols(); ++j) {
                    shift(i, j) = fixtures::random_rational(rng, 4);
                }
            }
            RationalMatrix mix = RationalMatrix::identity(s.normal_codim);
            for (std::size_t i = 0; i < mix.rows(); ++i) {
                for (std::size_t j = i + 1; j < mix.cols(); ++j) {
                    mix(i, j) = fixtures::random_rational(rng, 4);
                }
                mix(i, i) = Rational(1 + trial);
            }
            const RationalMatrix other = (s.complement + s.fixed_basis * shift) * mix;
            for (auto h : s.cls.centralizer) {
                EXPECT_EQ(Cyclotomic(normal_determinant(G.element(h), s.fixed_basis, other)), s.det_normal(h));
            }
        }
    }
}

TEST_P(SectorProperties, DerivedFixedLocusMatchesShiftedTangent) {
    for (const auto& s : sectors_of(fixtures::all_groups().at(GetParam()))) {
        EXPECT_EQ(derived_fixed_hilbert(s.element, 6), shifted_tangent_hilbert(s, 6));
    }
}

INSTANTIATE_TEST_SUITE_P(AllGroups, SectorProperties, ::testing::Range<std::size_t>(0, 8));

TEST(DerivedFixed, IdentityOnLine) {
    const auto k = derived_fixed_hilbert(mat({{1}}), 5);
    ASSERT_EQ(k.rows.size(), 2u);
    EXPECT_EQ(k.rows[0], (std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1}));
    // the Koszul generator e carries weight 1, so e·x^a sits in weight a + 1
    EXPECT_EQ(k.rows[1], (std::vector<std::uint64_t>{0, 1, 1, 1, 1, 1}));
}

TEST(DerivedFixed, MinusIdentity) {
    for (std::size_t n : {1u, 2u}) {
        RationalMatrix g = RationalMatrix::identity(n) * Rational(-1);
        const auto k = derived_fixed_hilbert(g, 6);
        EXPECT_EQ(k.rows[0], (std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0, 0}));
        for (std::size_t p = 1; p <= n; ++p) {
            EXPECT_EQ(k.rows[p], std::vector<std::uint64_t>(7, 0));
        }
        EXPECT_EQ(k.at(n + 3, 2), 0u);
    }
}

TEST(DerivedFixed, BasisCapAndShape) {
    EXPECT_THROW(derived_fixed_hilbert(RationalMatrix::identity(3), 10, 20), BasisTooLarge);
    EXPECT_THROW(derived_fixed_hilbert(mat({{1, 0}}), 3), NonSquareMatrix);
}

TEST(ShiftedTangent, SmallCases) {
    const auto s = sectors_of(fixtures::c2_sign());
    const auto point = shifted_tangent_hilbert(s[1], 4);
    EXPECT_EQ(point.rows[0], (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
    EXPECT_EQ(point.rows[1], (std::vector<std::uint64_t>{0, 0, 0, 0, 0}));
    const auto line = shifted_tangent_hilbert(s[0], 4);
    EXPECT_EQ(line.rows[0], (std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
    EXPECT_EQ(line.rows[1], (std::vector<std::uint64_t>{0, 1, 1, 1, 1}));
}
