#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "yangian/cyclicity.hpp"

using namespace yangian;

namespace {

SymbolicPoint num(long n, long d = 1) { return SymbolicPoint(GaussianRational(make_rational(n, d))); }
GaussianRational q(long n, long d = 1) { return GaussianRational(make_rational(n, d)); }

FactoredRational roots(std::initializer_list<SymbolicPoint> rs) {
  FactoredRational f;
  for (const auto& r : rs) f *= FactoredRational::linear(r);
  return f;
}

std::vector<GaussianRational> values(std::initializer_list<GaussianRational> v) { return v; }

LieDatum datum(Family f, int rank) { return make_lie_datum(make_lie_type(f, rank)); }

}  // namespace

TEST(GeneralPosition, Examples) {
  EXPECT_FALSE(general_position(roots({num(0)}), roots({num(1)})));
  EXPECT_TRUE(general_position(roots({num(0)}), roots({num(2)})));
  EXPECT_TRUE(general_position(FactoredRational(), roots({num(1)})));
  EXPECT_THROW(general_position(roots({SymbolicPoint::parameter("a")}), roots({num(1)})), Error);
  EXPECT_THROW(general_position(roots({num(0)}).inverse(), roots({num(1)})), Error);
}

TEST(ForbiddenDifferences, Examples) {
  const auto a1 = SymbolicPoint::parameter("a1"), a2 = SymbolicPoint::parameter("a2");
  EXPECT_EQ(forbidden_differences(roots({a1}), roots({a2}), 1), (std::set<GaussianRational>{q(1)}));
  EXPECT_EQ(forbidden_differences(roots({(a1 + q(3)) / Rational(2)}), roots({a2 / Rational(2)}), 2),
            (std::set<GaussianRational>{q(5)}));
  EXPECT_EQ(forbidden_differences(roots({a1, a1 + q(1)}), roots({a2}), 1),
            (std::set<GaussianRational>{q(1), q(2)}));
  EXPECT_THROW(forbidden_differences(roots({a1}), roots({a2 / Rational(2)}), 1), Error);
  EXPECT_THROW(forbidden_differences(roots({a1}), roots({a1}), 1), Error);
  EXPECT_THROW(forbidden_differences(roots({num(0)}), roots({a2}), 1), Error);
}

TEST(FundamentalSet, PublishedExamples) {
  const auto e6 = datum(Family::E, 6);
  EXPECT_EQ(fundamental_set(e6, longest_word(e6), 1, 1).values(), values({q(1), q(4)}));
  const auto g2 = datum(Family::G, 2);
  const WeylWord w(g2.type(), {2, 1, 2, 1, 2, 1});
  EXPECT_EQ(fundamental_set(g2, w, 2, 1).values(), values({q(9, 2), q(13, 2)}));
  EXPECT_EQ(fundamental_set(g2, w, 1, 1).values(), values({q(3), q(4), q(5), q(6)}));
  const auto a1 = datum(Family::A, 1);
  EXPECT_EQ(fundamental_set(a1, longest_word(a1), 1, 1).values(), values({q(1)}));
}

TEST(FundamentalSet, HandDerivedA2) {
  // T_2 (pi_{2,a}) = pi_{1,a+1/2} pi_{2,a+1}^{-1}; the only prefix with letter 1 before it gives 3/2.
  const auto a2 = datum(Family::A, 2);
  EXPECT_EQ(fundamental_set(a2, longest_word(a2), 2, 1).values(), values({q(3, 2)}));
  EXPECT_EQ(fundamental_set(a2, longest_word(a2), 1, 2).values(), values({q(3, 2)}));
  EXPECT_EQ(fundamental_set(a2, longest_word(a2), 1, 1).values(), values({q(1)}));
}

TEST(FundamentalSet, ProvenanceNamesThePrefix) {
  const auto g2 = datum(Family::G, 2);
  const auto s = fundamental_set(g2, longest_word(g2), 2, 1);
  for (const auto& v : s.values())
    for (const auto& w : s.witnesses(v)) {
      EXPECT_EQ(longest_word(g2)[w.prefix], 1);
      EXPECT_EQ(w.root.param(), std::optional<std::string>("a1"));
    }
  EXPECT_THROW(s.witnesses(q(100)), Error);
}

TEST(FundamentalSet, RejectsWordsThatAreNotW0) {
  const auto g2 = datum(Family::G, 2);
  EXPECT_THROW(fundamental_set(g2, WeylWord(g2.type(), {2, 1, 2, 1}), 1, 1), Error);
  EXPECT_THROW(fundamental_set(g2, WeylWord(g2.type(), {2, 1, 1, 2, 1, 2}), 1, 1), Error);
  EXPECT_THROW(fundamental_set(g2, longest_word(g2), 3, 1), Error);
}

TEST(FundamentalSetProperty, NumericBaseGivesTheSameDifferences) {
  // With a1 = c the prefix roots are c + const; the forbidden values are d + root - c.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> n(-9, 9), dd(1, 4);
  for (const auto& type : oracle::nine_families()) {
    const auto dat = make_lie_datum(type);
    const auto w0 = longest_word(dat);
    for (Node b1 = 1; b1 <= dat.rank(); ++b1) {
      const GaussianRational c(make_rational(n(rng), dd(rng)), make_rational(n(rng), dd(rng)));
      const auto pi = oracle::to_naive(fundamental_tuple(dat, b1, SymbolicPoint(c)));
      const auto row = fundamental_row(dat, w0, b1);
      std::vector<std::set<GaussianRational>> expected(dat.rank());
      for (std::size_t j = 1; j <= w0.size(); ++j) {
        const Node r = w0[j];
        const auto t = oracle::naive_word(dat, suffix(w0, j).letters(), pi);
        for (const auto& [root, m] : t[r - 1]) {
          ASSERT_GT(m, 0);
          expected[r - 1].insert(GaussianRational(dat.d(r)) + root - c);
        }
      }
      for (Node b2 = 1; b2 <= dat.rank(); ++b2) {
        std::vector<GaussianRational> e(expected[b2 - 1].begin(), expected[b2 - 1].end());
        EXPECT_EQ(row[b2 - 1].values(), e) << type.name() << " " << b1 << "," << b2;
        EXPECT_EQ(fundamental_set(dat, w0, b1, b2).values(), e);
      }
    }
  }
}

TEST(FundamentalSetProperty, SimplyLacedSymmetry) {
  for (int rank : {6, 7, 8}) {
    const auto e = datum(Family::E, rank);
    const auto w0 = longest_word(e);
    std::vector<std::vector<CyclicitySet>> rows;
    for (Node b = 1; b <= rank; ++b) rows.push_back(fundamental_row(e, w0, b));
    for (Node b1 = 1; b1 <= rank; ++b1)
      for (Node b2 = 1; b2 <= rank; ++b2)
        EXPECT_TRUE(same_values(rows[b1 - 1][b2 - 1], rows[b2 - 1][b1 - 1]));
  }
}

TEST(FundamentalSetProperty, HalfIntegerValues) {
  for (const auto& type : oracle::nine_families()) {
    const auto dat = make_lie_datum(type);
    for (Node b1 = 1; b1 <= dat.rank(); ++b1)
      for (const auto& s : fundamental_row(dat, longest_word(dat), b1))
        for (const auto& v : s.values()) {
          EXPECT_TRUE(denominators_divide(v, 2));
          EXPECT_TRUE(v.is_real());
        }
  }
}

TEST(FundamentalSetProperty, IndependentOfBraidRewriting) {
  for (const auto& type : {make_lie_type(Family::A, 3), make_lie_type(Family::C, 3),
                           make_lie_type(Family::G, 2), make_lie_type(Family::D, 4)}) {
    const auto dat = make_lie_datum(type);
    const auto base = longest_word(dat);
    for (const auto& w : braid_equivalent_words(dat, base, 8))
      for (Node b1 = 1; b1 <= dat.rank(); ++b1)
        for (Node b2 = 1; b2 <= dat.rank(); ++b2)
          EXPECT_EQ(fundamental_set(dat, w, b1, b2).values(),
                    fundamental_set(dat, base, b1, b2).values());
  }
}

TEST(KrSet, Examples) {
  const auto a1 = datum(Family::A, 1);
  const auto w = longest_word(a1);
  EXPECT_EQ(kr_set(a1, w, 1, 1, 1, 1).values(), fundamental_set(a1, w, 1, 1).values());
  EXPECT_EQ(kr_set(a1, w, 1, 2, 1, 1).values(), values({q(1), q(2)}));
  const auto g2 = datum(Family::G, 2);
  EXPECT_EQ(kr_set(g2, longest_word(g2), 2, 1, 1, 2).values(),
            values({q(7, 2), q(9, 2), q(11, 2), q(13, 2)}));
  EXPECT_THROW(kr_set(a1, w, 1, 0, 1, 1), Error);
}

TEST(KrSetProperty, MatchesMultiRootOracle) {
  for (const auto& type : {make_lie_type(Family::A, 1), make_lie_type(Family::A, 2),
                           make_lie_type(Family::C, 2), make_lie_type(Family::G, 2)}) {
    const auto dat = make_lie_datum(type);
    const auto w0 = longest_word(dat);
    for (Node b1 = 1; b1 <= dat.rank(); ++b1)
      for (Node b2 = 1; b2 <= dat.rank(); ++b2)
        for (int m1 = 1; m1 <= 3; ++m1)
          for (int m2 = 1; m1 + m2 <= 4; ++m2) {
            auto o = oracle::kr_prefix_oracle(dat, w0, b1, m1, b2, m2);
            EXPECT_EQ(kr_set(dat, w0, b1, m1, b2, m2).values(),
                      std::vector<GaussianRational>(o.begin(), o.end()));
          }
  }
}

TEST(CheckTensor, Verdicts) {
  const auto a1 = datum(Family::A, 1);
  const auto w = longest_word(a1);
  EXPECT_EQ(check_tensor(a1, w, {{1, q(0), 1}}).verdict, Verdict::Cyclic);
  auto ok = check_tensor(a1, w, {{1, q(0), 1}, {1, q(5), 1}});
  EXPECT_EQ(ok.verdict, Verdict::Cyclic);
  ASSERT_EQ(ok.pairs.size(), 1u);
  EXPECT_EQ(ok.pairs[0].difference, q(5));
  EXPECT_FALSE(ok.pairs[0].member);
  auto bad = check_tensor(a1, w, {{1, q(0), 1}, {1, q(1), 1}});
  EXPECT_EQ(bad.verdict, Verdict::Unknown);
  EXPECT_TRUE(bad.pairs[0].member);
  // Order matters: the reversed product has difference -1.
  EXPECT_EQ(check_tensor(a1, w, {{1, q(1), 1}, {1, q(0), 1}}).verdict, Verdict::Cyclic);
  EXPECT_EQ(check_tensor(a1, w, {{1, q(0), 1}, {1, q(3), 1}, {1, q(4), 1}}).pairs.size(), 3u);
  EXPECT_THROW(check_tensor(a1, w, {}), Error);
  EXPECT_THROW(check_tensor(a1, w, {{2, q(0), 1}}), Error);
}

TEST(CheckTensorProperty, VerdictIsConjunctionOfPairs) {
  const auto g2 = datum(Family::G, 2);
  const auto w = longest_word(g2);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> node(1, 2), len(1, 2), base(0, 16);
  for (int it = 0; it < 100; ++it) {
    std::vector<KrFactor> fs;
    for (int k = 0; k < 3; ++k) fs.push_back({node(rng), q(base(rng), 2), len(rng)});
    auto cert = check_tensor(g2, w, fs);
    bool any = false;
    for (const auto& p : cert.pairs) {
      any = any || p.member;
      EXPECT_EQ(p.member, p.tested.contains(p.difference));
      EXPECT_EQ(p.difference, fs[p.second].base - fs[p.first].base);
    }
    EXPECT_EQ(cert.verdict == Verdict::Unknown, any);
  }
}

TEST(WeylModuleOrder, Examples) {
  const auto a1 = datum(Family::A, 1);
  auto pi = fundamental_tuple(a1, 1, num(0));
  pi[1] *= FactoredRational::linear(num(1));
  auto order = weyl_module_order(a1, pi);
  ASSERT_EQ(order.size(), 2u);
  EXPECT_EQ(order[0].second, q(1));
  EXPECT_EQ(order[1].second, q(0));
  const auto a2 = datum(Family::A, 2);
  RationalTuple p(a2.type());
  p[1] = FactoredRational::linear(SymbolicPoint(GaussianRational(2, 1)));
  p[2] = FactoredRational::linear(num(2));
  auto o2 = weyl_module_order(a2, p);
  ASSERT_EQ(o2.size(), 2u);
  EXPECT_EQ(o2[0].first, 1);
  EXPECT_EQ(o2[1].first, 2);
  EXPECT_EQ(weyl_module_order(a1, fundamental_tuple(a1, 1, num(3))).size(), 1u);
  EXPECT_THROW(weyl_module_order(a1, fundamental_tuple(a1, 1, SymbolicPoint::parameter("a"))), Error);
}

TEST(WeylModuleOrder, RepeatedRootsAndCertificate) {
  const auto a1 = datum(Family::A, 1);
  RationalTuple pi(a1.type());
  pi[1] = FactoredRational::linear(num(0), 2);
  auto order = weyl_module_order(a1, pi);
  EXPECT_EQ(order.size(), 2u);
  // Equal roots: difference 0 is outside {1}.
  EXPECT_EQ(check_drinfeld_tuple(a1, longest_word(a1), pi).verdict, Verdict::Cyclic);
  pi[1] *= FactoredRational::linear(num(1));
  // Order 1, 0, 0: differences -1 only.
  EXPECT_EQ(check_drinfeld_tuple(a1, longest_word(a1), pi).verdict, Verdict::Cyclic);
}
