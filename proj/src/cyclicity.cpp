#include "yangian/cyclicity.hpp"

#include <algorithm>
#include <tuple>

#include "yangian/braid_action.hpp"

namespace yangian {

void CyclicitySet::insert(const GaussianRational& value, Witness witness) {
  entries_[value].push_back(std::move(witness));
}

void CyclicitySet::merge(const CyclicitySet& other) {
  for (const auto& [value, ws] : other.entries_) {
    auto& mine = entries_[value];
    mine.insert(mine.end(), ws.begin(), ws.end());
  }
}

CyclicitySet CyclicitySet::shifted(const GaussianRational& r) const {
  CyclicitySet out;
  for (const auto& [value, ws] : entries_) out.entries_.emplace(value + r, ws);
  return out;
}

std::vector<GaussianRational> CyclicitySet::values() const {
  std::vector<GaussianRational> out;
  out.reserve(entries_.size());
  for (const auto& [value, ws] : entries_) out.push_back(value);
  return out;
}

const std::vector<Witness>& CyclicitySet::witnesses(const GaussianRational& value) const {
  auto it = entries_.find(value);
  if (it == entries_.end()) throw Error(to_string(value) + " is not in the set");
  return it->second;
}

bool same_values(const CyclicitySet& a, const CyclicitySet& b) { return a.values() == b.values(); }

std::string to_string(const CyclicitySet& s) {
  std::string out = "{";
  for (const auto& [value, ws] : s.entries()) {
    if (out.size() > 1) out += ",";
    out += to_string(value);
  }
  return out + "}";
}

bool general_position(const FactoredRational& p, const FactoredRational& q) {
  if (!p.is_polynomial() || !q.is_polynomial())
    throw Error("general position is defined for polynomials only");
  if (!p.is_numeric() || !q.is_numeric())
    throw Error("general position needs numeric roots; use forbidden_differences for symbolic roots");
  const GaussianRational one(1);
  for (const auto& [t, tm] : q.factors())
    for (const auto& [s, sm] : p.factors())
      if (t.constant() - s.constant() == one) return false;
  return true;
}

GaussianRational unit_gap_difference(const SymbolicPoint& s, const SymbolicPoint& t, int d) {
  if (d <= 0) throw Error("symmetrizer must be positive");
  const Rational expected = make_rational(1, d);
  if (s.is_numeric() || t.is_numeric())
    throw Error("forbidden differences need both roots to carry a parameter");
  if (*s.param() == *t.param())
    throw Error("both roots use parameter '" + *s.param() + "'");
  if (s.param_coeff() != expected || t.param_coeff() != expected)
    throw Error("parameter coefficients " + to_string(s.param_coeff()) + " and " +
                to_string(t.param_coeff()) + " do not match 1/" + std::to_string(d));
  // (a2 - a1)/d + c_t - c_s = 1
  return (GaussianRational(1) + s.constant() - t.constant()) * Rational(d);
}

std::set<GaussianRational> forbidden_differences(const FactoredRational& p,
                                                 const FactoredRational& q, int d) {
  if (!p.is_polynomial() || !q.is_polynomial())
    throw Error("forbidden differences are defined for polynomials only");
  std::set<GaussianRational> out;
  for (const auto& [s, sm] : p.factors())
    for (const auto& [t, tm] : q.factors()) out.insert(unit_gap_difference(s, t, d));
  return out;
}

namespace {

void require_w0_word(const LieDatum& datum, const WeylWord& word) {
  if (word.type() != datum.type()) throw Error("word and datum have different types");
  if (static_cast<int>(word.size()) != datum.positive_root_count() || !is_reduced(datum, word))
    throw Error("word is not a reduced expression of the longest element of " +
                datum.type().name());
}

}  // namespace

std::vector<CyclicitySet> fundamental_row(const LieDatum& datum, const WeylWord& w0_word, Node b1) {
  datum.require_node(b1);
  require_w0_word(datum, w0_word);
  const auto a1 = SymbolicPoint::parameter("a1");
  const auto a2 = SymbolicPoint::parameter("a2");
  std::vector<CyclicitySet> row(static_cast<std::size_t>(datum.rank()));
  // Invariant at the top of each iteration: current = T_{sigma_j}(pi_{b1,a1}).
  RationalTuple current = fundamental_tuple(datum, b1, a1);
  for (std::size_t j = w0_word.size(); j >= 1; --j) {
    const Node r = w0_word[j];
    const FactoredRational& comp = current[r];
    if (!comp.is_polynomial())
      throw Error("component " + std::to_string(r) + " of T_sigma(pi) at prefix " +
                  std::to_string(j) + " is not a polynomial: " + to_string(comp));
    const int d = datum.d(r);
    const auto t = a2 / Rational(d);
    for (const auto& [s, mult] : comp.factors()) {
      auto value = unit_gap_difference(s / Rational(d), t, d);
      if (!denominators_divide(value, 2))
        throw Error("forbidden difference " + to_string(value) + " has denominator beyond 2");
      row[r - 1].insert(value, Witness{j, s, 0, 0});
    }
    current = apply_generator(datum, r, current);
  }
  return row;
}

CyclicitySet fundamental_set(const LieDatum& datum, const WeylWord& w0_word, Node b1, Node b2) {
  datum.require_node(b2);
  return fundamental_row(datum, w0_word, b1)[b2 - 1];
}

CyclicitySet kr_set(const LieDatum& datum, const WeylWord& w0_word, Node b1, int m1, Node b2,
                    int m2) {
  if (m1 < 1 || m2 < 1) throw Error("KR string lengths must be >= 1");
  const CyclicitySet base = fundamental_set(datum, w0_word, b1, b2);
  CyclicitySet out;
  for (int s = 0; s < m2; ++s) {
    for (int r = 0; r < m1; ++r) {
      for (const auto& [value, ws] : base.entries()) {
        for (Witness w : ws) {
          w.first_offset = r;
          w.second_offset = s;
          out.insert(value + GaussianRational(r - s), std::move(w));
        }
      }
    }
  }
  return out;
}

CyclicityCertificate check_tensor(const LieDatum& datum, const WeylWord& w0_word,
                                  const std::vector<KrFactor>& factors) {
  if (factors.empty()) throw Error("tensor product needs at least one factor");
  for (const auto& f : factors) {
    datum.require_node(f.node);
    if (f.length < 1) throw Error("KR string length must be >= 1");
  }
  require_w0_word(datum, w0_word);
  std::map<std::tuple<Node, int, Node, int>, CyclicitySet> cache;
  CyclicityCertificate cert;
  for (std::size_t m = 0; m < factors.size(); ++m) {
    for (std::size_t n = m + 1; n < factors.size(); ++n) {
      const auto& x = factors[m];
      const auto& y = factors[n];
      auto key = std::make_tuple(x.node, x.length, y.node, y.length);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, kr_set(datum, w0_word, x.node, x.length, y.node, y.length)).first;
      PairReport report{m, n, y.base - x.base, it->second, false};
      report.member = report.tested.contains(report.difference);
      if (report.member) cert.verdict = Verdict::Unknown;
      cert.pairs.push_back(std::move(report));
    }
  }
  return cert;
}

std::vector<std::pair<Node, GaussianRational>> weyl_module_order(const LieDatum& datum,
                                                                 const RationalTuple& pi) {
  if (pi.type() != datum.type()) throw Error("tuple and datum have different types");
  if (!pi.is_polynomial()) throw Error("weyl_module_order needs a Drinfeld (polynomial) tuple");
  std::vector<std::pair<Node, GaussianRational>> roots;
  for (Node i = 1; i <= pi.rank(); ++i) {
    for (const auto& [root, mult] : pi[i].factors()) {
      if (!root.is_numeric())
        throw Error("weyl_module_order needs numeric roots, got " + to_string(root));
      for (int k = 0; k < mult; ++k) roots.emplace_back(i, root.constant());
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (x.second.re != y.second.re) return x.second.re > y.second.re;
    if (x.second.im != y.second.im) return x.second.im > y.second.im;
    return x.first < y.first;
  });
  return roots;
}

CyclicityCertificate check_drinfeld_tuple(const LieDatum& datum, const WeylWord& w0_word,
                                          const RationalTuple& pi) {
  std::vector<KrFactor> factors;
  for (auto& [node, root] : weyl_module_order(datum, pi)) factors.push_back({node, root, 1});
  if (factors.empty()) return {};
  return check_tensor(datum, w0_word, factors);
}

}  // namespace yangian
