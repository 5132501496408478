#include "yangian/braid_action.hpp"

namespace yangian {

RationalTuple apply_generator(const LieDatum& datum, Node j, const RationalTuple& p) {
  datum.require_node(j);
  if (p.type() != datum.type())
    throw Error("tuple of type " + p.type().name() + " acted on by " + datum.type().name());
  const FactoredRational& pj = p[j];
  RationalTuple out = p;
  if (pj.is_one()) return out;
  const GaussianRational half(make_rational(1, 2));
  for (Node i = 1; i <= datum.rank(); ++i) {
    if (i == j) continue;
    switch (datum.cartan(i, j)) {
      case 0:
        break;
      case -1:
        out[i] *= shift_argument(pj, half * Rational(datum.d(i)));
        break;
      case -2:
        out[i] *= shift_argument(pj, GaussianRational(1));
        out[i] *= pj;
        break;
      case -3:
        out[i] *= shift_argument(pj, GaussianRational(make_rational(3, 2)));
        out[i] *= shift_argument(pj, half);
        out[i] *= shift_argument(pj, -half);
        break;
      default:
        throw Error("unsupported Cartan entry");
    }
  }
  out[j] = shift_argument(pj, GaussianRational(datum.d(j))).inverse();
  return out;
}

RationalTuple apply_word(const LieDatum& datum, const WeylWord& word, const RationalTuple& p) {
  if (word.type() != datum.type()) throw Error("word and datum have different types");
  RationalTuple out = p;
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
    out = apply_generator(datum, *it, out);
  return out;
}

bool check_braid_relation(const LieDatum& datum, Node i, Node j, const RationalTuple& p) {
  const int m = datum.braid_length(i, j);
  std::vector<Node> lhs, rhs;
  for (int k = 0; k < m; ++k) {
    lhs.push_back(k % 2 == 0 ? i : j);
    rhs.push_back(k % 2 == 0 ? j : i);
  }
  return apply_word(datum, WeylWord(datum.type(), lhs), p) ==
         apply_word(datum, WeylWord(datum.type(), rhs), p);
}

bool check_automorphism(const LieDatum& datum, Node j, const RationalTuple& p,
                        const RationalTuple& q) {
  return apply_generator(datum, j, multiply(p, q)) ==
         multiply(apply_generator(datum, j, p), apply_generator(datum, j, q));
}

RationalTuple random_tuple(const LieDatum& datum, std::mt19937_64& rng, const TupleSampling& shape) {
  std::uniform_int_distribution<int> count(0, shape.max_factors_per_node);
  std::uniform_int_distribution<int> mult(1, shape.max_multiplicity);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> num(-shape.max_numerator, shape.max_numerator);
  std::uniform_int_distribution<int> den(1, shape.max_denominator);
  std::uniform_int_distribution<int> coin(0, 3);
  RationalTuple p(datum.type());
  for (Node i = 1; i <= datum.rank(); ++i) {
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      GaussianRational root(make_rational(num(rng), den(rng)));
      if (shape.complex_roots && coin(rng) == 0) root.im = make_rational(num(rng), den(rng));
      const int m = mult(rng) * (sign(rng) == 0 ? 1 : -1);
      p[i] *= FactoredRational::linear(SymbolicPoint(root), m);
    }
  }
  return p;
}

BraidVerification verify_braid_relations(const LieDatum& datum, int iters, std::uint64_t seed) {
  if (iters < 1) throw Error("iteration count must be positive");
  std::mt19937_64 rng(seed);
  BraidVerification report;
  for (Node i = 1; i <= datum.rank(); ++i) {
    for (Node j = i + 1; j <= datum.rank(); ++j) {
      for (int it = 0; it < iters; ++it) {
        auto p = random_tuple(datum, rng);
        ++report.checks;
        if (!check_braid_relation(datum, i, j, p)) {
          report.failure = BraidCounterexample{i, j, std::move(p)};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace yangian
