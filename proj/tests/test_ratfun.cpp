#include <gtest/gtest.h>

#include <random>

#include "yangian/braid_action.hpp"
#include "yangian/ratfun.hpp"

using namespace yangian;

namespace {

SymbolicPoint num(long n, long d = 1) { return SymbolicPoint(GaussianRational(make_rational(n, d))); }

}  // namespace

TEST(SymbolicPoint, Printing) {
  const auto a = SymbolicPoint::parameter("a1");
  EXPECT_EQ(to_string(a), "a1");
  EXPECT_EQ(to_string((a + GaussianRational(3)) / Rational(2)), "a1/2+3/2");
  EXPECT_EQ(to_string(a - GaussianRational(make_rational(1, 2))), "a1-1/2");
  EXPECT_EQ(to_string(num(2) + GaussianRational(0, 1)), "2+i");
}

TEST(SymbolicPoint, CoefficientMustMatchParameter) {
  EXPECT_THROW(SymbolicPoint(std::string("a"), Rational(0), GaussianRational(0)), Error);
  EXPECT_THROW(SymbolicPoint(std::nullopt, Rational(1), GaussianRational(0)), Error);
}

TEST(FactoredRational, MultiplicationCancels) {
  auto f = FactoredRational::linear(num(1), 2) * FactoredRational::linear(num(3));
  EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE(f.is_polynomial());
  auto g = f * FactoredRational::linear(num(1), -2);
  EXPECT_EQ(g, FactoredRational::linear(num(3)));
  EXPECT_TRUE((f * f.inverse()).is_one());
  EXPECT_EQ(f.inverse().multiplicity(num(1)), -2);
  EXPECT_FALSE(f.inverse().is_polynomial());
}

TEST(FactoredRational, RejectsZeroMultiplicity) {
  EXPECT_THROW(FactoredRational::linear(num(1), 0), Error);
  EXPECT_THROW(FactoredRational(FactoredRational::Factors{{num(1), 0}}), Error);
}

TEST(FactoredRational, ShiftMovesRoots) {
  // f(u - c) has roots moved by +c
  auto f = FactoredRational::linear(num(1)) * FactoredRational::linear(num(2), -1);
  auto g = shift_argument(f, GaussianRational(make_rational(1, 2)));
  EXPECT_EQ(g.multiplicity(num(3, 2)), 1);
  EXPECT_EQ(g.multiplicity(num(5, 2)), -1);
  EXPECT_EQ(shift_argument(g, GaussianRational(make_rational(-1, 2))), f);
}

TEST(FactoredRational, TildeNormalizationDividesRoots) {
  auto a = SymbolicPoint::parameter("a1");
  auto f = FactoredRational::linear(a + GaussianRational(3));
  auto g = tilde_normalize(f, 2);
  ASSERT_EQ(g.factors().size(), 1u);
  const auto& root = g.factors().begin()->first;
  EXPECT_EQ(root.param_coeff(), make_rational(1, 2));
  EXPECT_EQ(root.constant(), GaussianRational(make_rational(3, 2)));
  EXPECT_THROW(tilde_normalize(f, 0), Error);
}

TEST(RationalTuple, IndexingAndTypes) {
  const auto datum = make_lie_datum(make_lie_type(Family::A, 3));
  RationalTuple p(datum.type());
  EXPECT_TRUE(p.is_identity());
  EXPECT_THROW(p[0], Error);
  EXPECT_THROW(p[4], Error);
  auto q = fundamental_tuple(datum, 2, num(5));
  EXPECT_EQ(q[2], FactoredRational::linear(num(5)));
  EXPECT_TRUE(q[1].is_one());
  auto other = RationalTuple(make_lie_type(Family::B, 3));
  EXPECT_THROW(multiply(q, other), Error);
}

TEST(RationalTuple, KrStringHasConsecutiveRoots) {
  const auto datum = make_lie_datum(make_lie_type(Family::G, 2));
  auto p = kr_tuple(datum, 1, num(1, 2), 3);
  EXPECT_EQ(p[1].degree(), 3);
  for (long k : {1, 3, 5}) EXPECT_EQ(p[1].multiplicity(num(k, 2)), 1);
  EXPECT_THROW(kr_tuple(datum, 1, num(0), 0), Error);
}

TEST(RationalTupleProperty, GroupAxioms) {
  const auto datum = make_lie_datum(make_lie_type(Family::C, 3));
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    auto p = random_tuple(datum, rng), q = random_tuple(datum, rng), r = random_tuple(datum, rng);
    EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
    EXPECT_EQ(multiply(p, q), multiply(q, p));
    EXPECT_EQ(multiply(p, RationalTuple(datum.type())), p);
    EXPECT_TRUE(multiply(p, invert(p)).is_identity());
    EXPECT_EQ(invert(invert(p)), p);
  }
}
