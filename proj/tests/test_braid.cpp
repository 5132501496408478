#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "yangian/braid_action.hpp"

using namespace yangian;

namespace {

SymbolicPoint num(long n, long d = 1) { return SymbolicPoint(GaussianRational(make_rational(n, d))); }

RationalTuple product(const LieDatum& datum, std::initializer_list<std::tuple<Node, SymbolicPoint, int>> fs) {
  RationalTuple p(datum.type());
  for (const auto& [i, root, m] : fs) p[i] *= FactoredRational::linear(root, m);
  return p;
}

}  // namespace

TEST(Braid, GeneratorFixesOtherFundamentalTuples) {
  for (const auto& type : oracle::nine_families()) {
    const auto datum = make_lie_datum(type);
    for (Node i = 1; i <= datum.rank(); ++i)
      for (Node m = 1; m <= datum.rank(); ++m)
        if (m != i) {
          auto p = fundamental_tuple(datum, i, num(1, 3));
          EXPECT_EQ(apply_generator(datum, m, p), p);
        }
  }
}

TEST(Braid, EmptyWordIsIdentity) {
  const auto datum = make_lie_datum(make_lie_type(Family::F, 4));
  std::mt19937_64 rng(1);
  auto p = random_tuple(datum, rng);
  EXPECT_EQ(apply_word(datum, WeylWord(datum.type(), {}), p), p);
}

TEST(Braid, RankOneInvertsAndShifts) {
  // T_1(pi)_1 = 1/pi(u - 1); the eigenvalue ratio T(u+1)/T(u) is pi(u-1)/pi(u) as factor multisets.
  const auto datum = make_lie_datum(make_lie_type(Family::A, 1));
  std::mt19937_64 rng(2);
  for (int it = 0; it < 100; ++it) {
    auto p = random_tuple(datum, rng);
    auto t = apply_generator(datum, 1, p)[1];
    EXPECT_EQ(t, shift_argument(p[1], GaussianRational(1)).inverse());
    auto ratio = shift_argument(t, GaussianRational(-1)) * t.inverse();
    EXPECT_EQ(ratio, shift_argument(p[1], GaussianRational(1)) * p[1].inverse());
  }
}

TEST(Braid, ApplyWordComposesRightToLeft) {
  const auto datum = make_lie_datum(make_lie_type(Family::A, 2));
  auto p = fundamental_tuple(datum, 1, num(0));
  // T_2 T_1 (pi_{1,0}): T_1 gives pi_{1,1}^{-1} pi_{2,1/2}; T_2 then acts on the second factor.
  auto t = apply_word(datum, WeylWord(datum.type(), {2, 1}), p);
  auto expected = product(datum, {{1, num(1), -1}, {1, num(1), 1}, {2, num(3, 2), -1}});
  EXPECT_EQ(t, expected);
  EXPECT_EQ(t, apply_generator(datum, 2, apply_generator(datum, 1, p)));
}

TEST(BraidProperty, GeneratorMatchesNaiveOracle) {
  std::mt19937_64 rng(21);
  for (const auto& type : oracle::nine_families()) {
    const auto datum = make_lie_datum(type);
    for (int it = 0; it < 60; ++it) {
      auto p = random_tuple(datum, rng);
      for (Node j = 1; j <= datum.rank(); ++j)
        EXPECT_EQ(oracle::to_naive(apply_generator(datum, j, p)),
                  oracle::naive_generator(datum, j, oracle::to_naive(p)))
            << type.name() << " j=" << j;
    }
  }
}

TEST(BraidProperty, WordMatchesNaiveOracle) {
  std::mt19937_64 rng(22);
  for (const auto& type : oracle::nine_families()) {
    const auto datum = make_lie_datum(type);
    oracle::RootSystem rs(datum);
    for (int it = 0; it < 20; ++it) {
      auto w = oracle::random_reduced_word(rs, rng, 10);
      auto p = random_tuple(datum, rng);
      EXPECT_EQ(oracle::to_naive(apply_word(datum, WeylWord(type, w), p)),
                oracle::naive_word(datum, w, oracle::to_naive(p)));
    }
  }
}

TEST(BraidProperty, RelationsAndMultiplicativity) {
  std::mt19937_64 rng(23);
  for (const auto& type : oracle::nine_families()) {
    const auto datum = make_lie_datum(type);
    for (int it = 0; it < 20; ++it) {
      auto p = random_tuple(datum, rng), q = random_tuple(datum, rng);
      for (Node i = 1; i <= datum.rank(); ++i) {
        EXPECT_TRUE(check_automorphism(datum, i, p, q));
        for (Node j = i + 1; j <= datum.rank(); ++j)
          EXPECT_TRUE(check_braid_relation(datum, i, j, p)) << type.name() << i << j;
      }
    }
  }
}

TEST(BraidProperty, SymbolicRootsFollowTheSameRules) {
  const auto datum = make_lie_datum(make_lie_type(Family::G, 2));
  const auto a = SymbolicPoint::parameter("a");
  for (Node i = 1; i <= 2; ++i)
    EXPECT_TRUE(check_braid_relation(datum, 1, 2, fundamental_tuple(datum, i, a)));
}

TEST(Braid, VerificationReport) {
  const auto datum = make_lie_datum(make_lie_type(Family::B, 3));
  auto v = verify_braid_relations(datum, 10, 42);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.checks, 30u);
  auto w = verify_braid_relations(datum, 10, 42);
  EXPECT_EQ(w.checks, v.checks);
  EXPECT_THROW(verify_braid_relations(datum, 0, 1), Error);
}

TEST(Braid, RandomTuplesAreDeterministicAndShaped) {
  const auto datum = make_lie_datum(make_lie_type(Family::E, 6));
  std::mt19937_64 r1(5), r2(5);
  TupleSampling shape;
  shape.complex_roots = false;
  for (int it = 0; it < 50; ++it) {
    auto p = random_tuple(datum, r1, shape);
    EXPECT_EQ(p, random_tuple(datum, r2, shape));
    for (Node i = 1; i <= datum.rank(); ++i)
      for (const auto& [root, m] : p[i].factors()) {
        EXPECT_TRUE(root.constant().is_real());
        EXPECT_LE(std::abs(m), shape.max_multiplicity * shape.max_factors_per_node);
      }
  }
}
