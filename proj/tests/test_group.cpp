#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace orbifold_hkr;
using fixtures::mat;

TEST(Generate, SignGroup) {
    const auto G = MatrixGroup::generate({mat({{-1}})});
    EXPECT_EQ(G.order(), 2u);
    EXPECT_EQ(G.element(0), mat({{1}}));
    EXPECT_TRUE(G.contains(mat({{-1}})));
    EXPECT_EQ(exponent(G), 2u);
}

TEST(Generate, SymmetricGroupOnThreeLetters) {
    const auto G = MatrixGroup::generate(fixtures::s3_permutation().generators);
    EXPECT_EQ(G.order(), 6u);
    EXPECT_EQ(G.exponent(), 6u);
    EXPECT_FALSE(G.is_abelian());
}

TEST(Generate, TrivialGroup) {
    const auto G = MatrixGroup::generate({RationalMatrix::identity(3)});
    EXPECT_EQ(G.order(), 1u);
    EXPECT_EQ(G.exponent(), 1u);
}

TEST(Generate, ErrorPaths) {
    EXPECT_THROW(MatrixGroup::generate({mat({{1, 1}, {0, 1}})}), OrderCapExceeded);
    EXPECT_THROW(MatrixGroup::generate({mat({{2}})}, 100), OrderCapExceeded);
    EXPECT_THROW(MatrixGroup::generate({mat({{1, 0}, {0, 0}})}), NotInvertible);
    EXPECT_THROW(MatrixGroup::generate({mat({{1, 0}})}), NonSquareMatrix);
    EXPECT_THROW(MatrixGroup::generate({mat({{-1}}), RationalMatrix::identity(2)}), NonSquareMatrix);
    EXPECT_THROW(MatrixGroup::generate({}), InputError);
    // two finite-order elements generating an infinite group
    EXPECT_THROW(MatrixGroup::generate({mat({{-1, 0}, {0, 1}}), mat({{-1, 1}, {0, 1}})}, 500), CapError);
    // D4 has order 8; a cap of 5 must trip
    EXPECT_THROW(MatrixGroup::generate({mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})}, 5), CapExceeded);
}

TEST(Generate, EnumerationIsDeterministic) {
    const auto a = MatrixGroup::generate(fixtures::s3_permutation().generators);
    const auto b = MatrixGroup::generate(fixtures::s3_permutation().generators);
    for (std::size_t k = 0; k < a.order(); ++k) {
        EXPECT_EQ(a.element(k), b.element(k));
    }
}

TEST(ConjugacyClasses, SmallGroups) {
    {
        const auto G = MatrixGroup::generate({mat({{-1}})});
        const auto cls = conjugacy_classes(G);
        ASSERT_EQ(cls.size(), 2u);
        for (const auto& c : cls) {
            EXPECT_EQ(c.members.size(), 1u);
            EXPECT_EQ(c.centralizer.size(), 2u);
        }
    }
    {
        const auto G = MatrixGroup::generate(fixtures::s3_permutation().generators);
        const auto cls = conjugacy_classes(G);
        ASSERT_EQ(cls.size(), 3u);
        std::vector<std::pair<std::size_t, std::size_t>> shape;
        for (const auto& c : cls) {
            shape.emplace_back(c.members.size(), c.centralizer.size());
        }
        EXPECT_EQ(shape, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 6}, {3, 2}, {2, 3}}));
    }
    {
        const auto G = MatrixGroup::generate(fixtures::c4_rotation().generators);
        const auto cls = conjugacy_classes(G);
        EXPECT_EQ(cls.size(), 4u);
        for (const auto& c : cls) {
            EXPECT_EQ(c.members.size(), 1u);
        }
    }
}

class GroupProperties : public ::testing::TestWithParam<std::size_t> {
protected:
    fixtures::NamedGroup group() const { return fixtures::all_groups().at(GetParam()); }
};

TEST_P(GroupProperties, ClassEquationAndOrbitStabilizer) {
    const auto G = MatrixGroup::generate(group().generators);
    const auto classes = conjugacy_classes(G);
    std::size_t total = 0;
    std::set<ElementId> seen;
    for (const auto& c : classes) {
        total += c.members.size();
        EXPECT_EQ(c.members.size() * c.centralizer.size(), G.order());
        EXPECT_EQ(c.representative, c.members.front());
        EXPECT_TRUE(std::binary_search(c.centralizer.begin(), c.centralizer.end(), c.representative));
        EXPECT_TRUE(std::binary_search(c.centralizer.begin(), c.centralizer.end(), G.identity()));
        for (auto m : c.members) {
            EXPECT_TRUE(seen.insert(m).second) << "classes overlap";
        }
    }
    EXPECT_EQ(total, G.order());
}

TEST_P(GroupProperties, ConjugationPreservesClasses) {
    const auto G = MatrixGroup::generate(group().generators);
    for (const auto& c : conjugacy_classes(G)) {
        for (ElementId h = 0; h < G.order(); ++h) {
            for (auto g : c.members) {
                const ElementId conj = G.multiply(G.multiply(h, g), G.inverse(h));
                EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), conj));
            }
        }
    }
}

TEST_P(GroupProperties, OrdersDivideExponentDividesOrder) {
    const auto G = MatrixGroup::generate(group().generators);
    std::size_t l = 1;
    for (ElementId k = 0; k < G.order(); ++k) {
        EXPECT_EQ(G.exponent() % G.element_order(k), 0u);
        EXPECT_EQ(G.multiply(k, G.inverse(k)), G.identity());
        l = std::lcm(l, G.element_order(k));
    }
    EXPECT_EQ(l, G.exponent());
    EXPECT_EQ(G.order() % G.exponent(), 0u);
}

INSTANTIATE_TEST_SUITE_P(AllGroups, GroupProperties, ::testing::Range<std::size_t>(0, 8));
