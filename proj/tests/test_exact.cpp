#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace orbifold_hkr;
using fixtures::mat;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, unsigned m) {
    std::vector<Rational> coords(euler_phi(m));
    for (auto& c : coords) {
        c = fixtures::random_rational(rng, 5);
    }
    return Cyclotomic(m, coords);
}

} // namespace

TEST(Rational, ParsesAndPrints) {
    EXPECT_EQ(Rational::parse("3/6").str(), "1/2");
    EXPECT_EQ(Rational::parse("-4/2").str(), "-2");
    EXPECT_EQ(Rational::parse("+7").str(), "7");
    EXPECT_EQ(Rational::parse("0/5").str(), "0");
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "1.5", " 1", "1/-2", "--1", "a", "1/", "/2", "2/3/4"}) {
        EXPECT_THROW(Rational::parse(bad), BadRational) << bad;
    }
}

TEST(Rational, CanonicalAndExact) {
    const Rational a(6, -4);
    EXPECT_EQ(a.num(), -3);
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Cyclotomic, FourthRootSquaresToMinusOne) {
    const auto i = Cyclotomic::root_of_unity(4);
    const auto sq = i * i;
    EXPECT_EQ(sq, Cyclotomic(4, {Rational(-1), Rational(0)}));
    EXPECT_EQ(sq, Cyclotomic(-1));
}

TEST(Cyclotomic, PrimitiveCubeRootsSumToMinusOne) {
    const auto z = Cyclotomic::root_of_unity(3);
    EXPECT_EQ(z + z * z, Cyclotomic(-1));
    EXPECT_TRUE((z + z * z).is_rational());
}

TEST(Cyclotomic, InverseOfOneMinusZeta3) {
    const auto z = Cyclotomic::root_of_unity(3);
    const auto inv = (Cyclotomic(1) - z).inv();
    EXPECT_EQ(inv, Cyclotomic(3, {Rational(2, 3), Rational(1, 3)}));
}

TEST(Cyclotomic, ErrorPaths) {
    EXPECT_THROW(Cyclotomic(5, std::vector<Rational>(4)).inv(), DivisionByZero);
    EXPECT_THROW(Cyclotomic(0).inv(), DivisionByZero);
    EXPECT_THROW(Cyclotomic::root_of_unity(3) + Cyclotomic::root_of_unity(4), ConductorMismatch);
    EXPECT_THROW(Cyclotomic(4, {Rational(1)}), std::invalid_argument);
}

TEST(Cyclotomic, EmbeddingRespectsRoots) {
    // ζ₃ sits in ℚ(ζ₆) as ζ₆²; ζ₄ in ℚ(ζ₁₂) as ζ₁₂³
    EXPECT_EQ(Cyclotomic::root_of_unity(3).embed(6), Cyclotomic::root_of_unity(6, 2));
    EXPECT_EQ(Cyclotomic::root_of_unity(4).embed(12), Cyclotomic::root_of_unity(12, 3));
    EXPECT_EQ(Cyclotomic::root_of_unity(4), Cyclotomic::root_of_unity(12, 3));
    EXPECT_EQ(Cyclotomic::root_of_unity(12).pow(12), Cyclotomic(1));
}

TEST(Cyclotomic, PolynomialsHaveDegreePhi) {
    for (unsigned m = 1; m <= 30; ++m) {
        EXPECT_EQ(cyclotomic_polynomial(m).degree(), static_cast<long>(euler_phi(m))) << m;
    }
    EXPECT_EQ(cyclotomic_polynomial(6), UniPoly<Rational>({Rational(1), Rational(-1), Rational(1)}));
}

class CyclotomicFieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(CyclotomicFieldAxioms, HoldOnRandomElements) {
    const unsigned m = GetParam();
    std::mt19937 rng(1000 + m);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_cyclotomic(rng, m);
        const auto b = random_cyclotomic(rng, m);
        const auto c = random_cyclotomic(rng, m);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inv(), Cyclotomic(1).embed(m));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Conductors, CyclotomicFieldAxioms, ::testing::Values(1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u));

TEST(UniPoly, DivmodAndInterpolate) {
    using P = UniPoly<Rational>;
    const P a({Rational(-1), Rational(0), Rational(0), Rational(1)}); // x³ − 1
    const P b({Rational(-1), Rational(1)});                          // x − 1
    const auto [q, r] = divmod(a, b);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, P({Rational(1), Rational(1), Rational(1)}));
    const std::vector<Rational> xs{Rational(0), Rational(1), Rational(2), Rational(3)};
    std::vector<Rational> ys;
    for (const auto& x : xs) {
        ys.push_back(a(x));
    }
    EXPECT_EQ(P::interpolate(xs, ys), a);
}

TEST(DetSeriesFactor, GeometricSeries) {
    const auto s = det_series_factor(mat({{1}}), Sign::minus, Marker::t, FactorKind::reciprocal, 3);
    for (std::size_t d = 0; d <= 3; ++d) {
        EXPECT_EQ(s.at(0, d), Rational(1));
    }
}

TEST(DetSeriesFactor, NumeratorWithFormMarker) {
    const auto s = det_series_factor(mat({{-1}}), Sign::plus, Marker::u_t, FactorKind::numerator, 4);
    EXPECT_EQ(s.at(0, 0), Rational(1));
    EXPECT_EQ(s.at(1, 1), Rational(-1));
    EXPECT_EQ(s.at(1, 2), Rational(0));
    EXPECT_EQ(s.at(0, 1), Rational(0));
}

TEST(DetSeriesFactor, TwoByTwoIdentity) {
    const auto s = det_series_factor(RationalMatrix::identity(2), Sign::minus, Marker::t, FactorKind::reciprocal, 2);
    EXPECT_EQ(s.at(0, 0), Rational(1));
    EXPECT_EQ(s.at(0, 1), Rational(2));
    EXPECT_EQ(s.at(0, 2), Rational(3));
}

TEST(DetSeriesFactor, ReciprocalRequiresTMarker) {
    EXPECT_THROW(det_series_factor(mat({{1}}), Sign::minus, Marker::u_t, FactorKind::reciprocal, 2),
                 std::invalid_argument);
}

TEST(DetSeriesFactor, ReciprocalTimesDeterminantIsOne) {
    // random finite-order matrices: conjugates of the sweep generators by random unimodular matrices
    std::mt19937 rng(77);
    for (const auto& group : fixtures::all_groups()) {
        const auto G = MatrixGroup::generate(group.generators);
        for (std::size_t k = 0; k < G.order(); ++k) {
            const auto embedded = embed_matrix(G.element(k), static_cast<unsigned>(G.exponent()));
            const std::size_t t_max = std::uniform_int_distribution<std::size_t>(0, 9)(rng);
            const auto inv = det_series_factor(embedded, Sign::minus, Marker::t, FactorKind::reciprocal, t_max);
            const auto det = det_series_factor(embedded, Sign::minus, Marker::t, FactorKind::numerator, t_max);
            EXPECT_EQ(inv * det, BasicBiSeries<Cyclotomic>::one(0, t_max)) << group.name << " element " << k;
        }
    }
}

TEST(BiSeries, ProductTruncatesAndAddsFormDegree) {
    BiSeries a(1, 3);
    a.at(0, 0) = Rational(1);
    a.at(1, 1) = Rational(1);
    BiSeries b(1, 3);
    b.at(0, 0) = Rational(1);
    b.at(1, 2) = Rational(2);
    const auto c = a * b;
    EXPECT_EQ(c.u_max(), 2u);
    EXPECT_EQ(c.at(2, 3), Rational(2));
    EXPECT_EQ(c.at(1, 2), Rational(2));
    EXPECT_EQ(c.at(1, 1), Rational(1));
    const auto shifted = a.shift_u(2);
    EXPECT_EQ(shifted.at(3, 1), Rational(1));
    EXPECT_EQ(shifted.at(0, 0), Rational(0));
}

TEST(Smith, SmallCases) {
    EXPECT_EQ(smith_normal_form(IntMatrix{{Integer(2)}}), std::vector<Integer>{Integer(2)});
    EXPECT_EQ(smith_normal_form(IntMatrix{{Integer(1), Integer(0)}, {Integer(0), Integer(0)}}),
              std::vector<Integer>{Integer(1)});
    EXPECT_TRUE(smith_normal_form(IntMatrix(3, 2)).empty());
    EXPECT_EQ(smith_normal_form(IntMatrix{{Integer(2), Integer(0)}, {Integer(0), Integer(3)}}),
              (std::vector<Integer>{Integer(1), Integer(6)}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{Integer(2), Integer(4), Integer(4)},
                                          {Integer(-6), Integer(6), Integer(12)},
                                          {Integer(10), Integer(-4), Integer(-16)}}),
              (std::vector<Integer>{Integer(2), Integer(6), Integer(12)}));
}

TEST(Smith, GammaBoundary) {
    for (long r = 2; r <= 12; ++r) {
        EXPECT_EQ(smith_normal_form(IntMatrix{{Integer(r)}}), std::vector<Integer>{Integer(r)});
    }
}

TEST(Smith, DivisibilityAndDeterminantOnRandomMatrices) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = size(rng);
        const std::size_t cols = size(rng);
        IntMatrix m(rows, cols);
        RationalMatrix q(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const long x = entry(rng);
                m(i, j) = Integer(x);
                q(i, j) = Rational(x);
            }
        }
        const auto factors = smith_normal_form(m);
        EXPECT_EQ(factors.size(), rank(q));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            EXPECT_GT(factors[k], 0);
            if (k + 1 < factors.size()) {
                EXPECT_EQ(factors[k + 1] % factors[k], 0);
            }
        }
        if (rows == cols && factors.size() == rows) {
            Integer product = 1;
            for (const auto& f : factors) {
                product *= f;
            }
            EXPECT_EQ(Rational(product), abs(determinant(q)));
        }
    }
}

TEST(Eigenspace, SmallMatrices) {
    EXPECT_EQ(eigenspace(RationalMatrix::identity(2), Cyclotomic(1)).cols(), 2u);
    EXPECT_EQ(eigenspace(mat({{-1}}), Cyclotomic(-1)).cols(), 1u);
    EXPECT_EQ(eigenspace(mat({{-1}}), Cyclotomic(1)).cols(), 0u);
    const auto rot = mat({{0, -1}, {1, 0}});
    const auto i = Cyclotomic::root_of_unity(4);
    const auto basis = eigenspace(rot, i);
    ASSERT_EQ(basis.cols(), 1u);
    const auto g = embed_matrix(rot, 4);
    for (std::size_t r = 0; r < 2; ++r) {
        EXPECT_EQ(g(r, 0) * basis(0, 0) + g(r, 1) * basis(1, 0), i * basis(r, 0));
    }
}

TEST(Eigenspace, RejectsInfiniteOrder) {
    EXPECT_THROW(eigenspace(mat({{1, 1}, {0, 1}}), Cyclotomic(1), 50), OrderCapExceeded);
}

TEST(Eigenspace, DimensionsSumToAmbient) {
    for (const auto& group : fixtures::all_groups()) {
        const auto G = MatrixGroup::generate(group.generators);
        for (std::size_t k = 0; k < G.order(); ++k) {
            const std::size_t ord = G.element_order(k);
            std::size_t total = 0;
            for (std::size_t j = 0; j < ord; ++j) {
                total += eigenspace(G.element(k), Cyclotomic::root_of_unity(static_cast<unsigned>(ord), j)).cols();
            }
            EXPECT_EQ(total, G.ambient_dim()) << group.name << " element " << k;
        }
    }
}
