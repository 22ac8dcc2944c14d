#include <gtest/gtest.h>

#include <random>

#include "edgecone/linalg.hpp"
#include "edgecone/rational.hpp"

using namespace edgecone;

namespace {
RationalVector rv(std::initializer_list<std::int64_t> xs) { return to_rational(IntVector(xs)); }
}  // namespace

TEST(ParseRational, AcceptedForms) {
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("+2.5"), Rational(5, 2));
    EXPECT_EQ(parse_rational(" 6/4 "), Rational(3, 2));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("123456789012345678901234567890"),
              Rational(Integer("123456789012345678901234567890")));
}

TEST(ParseRational, Rejections) {
    for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.2.3", "1e5", "--1", "."})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(ParseRational, VectorRoundTrip) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        RationalVector v(1 + rng() % 6);
        for (auto& q : v)
            q = Rational(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(1 + rng() % 50));
        EXPECT_EQ(parse_rational_vector(to_string(v)), v);
    }
    EXPECT_EQ(to_string(parse_rational_vector("3/2,0,1")), "3/2,0,1");
}

TEST(RationalRank, Examples) {
    EXPECT_EQ(rational_rank({rv({1, 1, 0}), rv({0, 1, 1}), rv({1, 0, 1})}), 3u);
    EXPECT_EQ(rational_rank({rv({1, 1, 0}), rv({0, 1, 1})}), 2u);
    EXPECT_EQ(rational_rank({}), 0u);
    // even cycle: four edge vectors of C4 are dependent
    EXPECT_EQ(rational_rank({rv({1, 1, 0, 0}), rv({0, 1, 1, 0}), rv({0, 0, 1, 1}), rv({1, 0, 0, 1})}), 3u);
}

TEST(RationalRank, DimensionMismatchRejected) {
    EXPECT_THROW(rational_rank({rv({1, 1}), rv({1, 1, 1})}), DimensionMismatch);
}

TEST(Linalg, NullspaceAnnihilates) {
    linalg::Matrix<Rational> m{rv({1, 2, 3, 4}), rv({2, 4, 6, 8}), rv({0, 1, 0, 1})};
    const auto ns = linalg::nullspace(m, 4);
    EXPECT_EQ(ns.size(), 2u);
    for (const auto& v : ns)
        for (const auto& row : m) {
            Rational s = 0;
            for (std::size_t i = 0; i < 4; ++i) s += row[i] * v[i];
            EXPECT_EQ(s, 0);
        }
}

TEST(Linalg, SolveAndInconsistency) {
    linalg::Matrix<Rational> a{rv({1, 1}), rv({1, -1})};
    const RationalVector b{Rational(3), Rational(1)};
    auto x = linalg::solve<Rational>(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], 2);
    EXPECT_EQ((*x)[1], 1);
    linalg::Matrix<Rational> sing{rv({1, 1}), rv({2, 2})};
    const RationalVector c{Rational(1), Rational(3)};
    EXPECT_FALSE(linalg::solve<Rational>(sing, c));
}

TEST(Linalg, ProjectionOntoRowspace) {
    linalg::Matrix<Rational> basis{rv({1, 1, 0})};
    const RationalVector v = rv({1, 0, 5});
    const auto p = linalg::project_onto_rowspace<Rational>(basis, v);
    EXPECT_EQ(p, (RationalVector{Rational(1, 2), Rational(1, 2), Rational(0)}));
}

TEST(Primitive, NormalizationIsAFixedPoint) {
    EXPECT_EQ(make_primitive({2, -4, 0, 6}), (IntVector{1, -2, 0, 3}));
    EXPECT_EQ(make_primitive({0, 0}), (IntVector{0, 0}));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        IntVector v(5);
        for (auto& c : v) c = static_cast<std::int64_t>(rng() % 41) - 20;
        const auto p = make_primitive(v);
        EXPECT_EQ(make_primitive(p), p);
    }
    EXPECT_EQ(primitive_integer_multiple(RationalVector{Rational(1, 2), Rational(-3, 4), Rational(0)}),
              (IntVector{2, -3, 0}));
}
