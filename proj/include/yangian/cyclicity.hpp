#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "yangian/lie_data.hpp"
#include "yangian/ratfun.hpp"
#include "yangian/weyl.hpp"

namespace yangian {

/// Where a forbidden difference came from: the prefix index j (so sigma_j = s_{r_{j+1}}...s_{r_p}),
/// the root of (T_{sigma_j} pi)_{r_j} before normalization, and the KR string offsets used.
struct Witness {
  std::size_t prefix = 0;
  SymbolicPoint root;
  int first_offset = 0;
  int second_offset = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Finite set of values of a2 - a1 at which cyclicity may fail, ordered by real part and
/// then imaginary part, each value carrying the witnesses that produced it.
class CyclicitySet {
 public:
  using Entries = std::map<GaussianRational, std::vector<Witness>>;

  CyclicitySet() = default;

  void insert(const GaussianRational& value, Witness witness);
  void merge(const CyclicitySet& other);
  /// S + r: every value moved by r.
  CyclicitySet shifted(const GaussianRational& r) const;

  bool contains(const GaussianRational& value) const { return entries_.count(value) != 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::vector<GaussianRational> values() const;
  const std::vector<Witness>& witnesses(const GaussianRational& value) const;
  const Entries& entries() const { return entries_; }

  friend bool same_values(const CyclicitySet& a, const CyclicitySet& b);

 private:
  Entries entries_;
};

std::string to_string(const CyclicitySet& s);

/// No root t of q and root s of p with t - s = 1. Both polynomial with numeric roots.
bool general_position(const FactoredRational& p, const FactoredRational& q);

/// Value of a2 - a1 making t - s = 1, where s = a1/d + c_s and t = a2/d + c_t.
GaussianRational unit_gap_difference(const SymbolicPoint& s, const SymbolicPoint& t, int d);

/// All a2 - a1 for which p (roots a1/d + const) fails to be in general position with
/// respect to q (roots a2/d + const).
std::set<GaussianRational> forbidden_differences(const FactoredRational& p,
                                                 const FactoredRational& q, int d);

/// S(b1, b2): values of a2 - a1 where V_{a1}(omega_{b1}) (x) V_{a2}(omega_{b2}) may fail to be
/// generated by the tensor product of highest weight vectors, computed from the prefixes of
/// a reduced word for w0 whose letter is b2.
CyclicitySet fundamental_set(const LieDatum& datum, const WeylWord& w0_word, Node b1, Node b2);

/// All S(b1, .) for one b1 in a single sweep over the word; index b2 - 1.
std::vector<CyclicitySet> fundamental_row(const LieDatum& datum, const WeylWord& w0_word, Node b1);

/// union over s < m2, r < m1 of S(b1, b2) - s + r.
CyclicitySet kr_set(const LieDatum& datum, const WeylWord& w0_word, Node b1, int m1, Node b2,
                    int m2);

/// Kirillov-Reshetikhin data: node b, base point a, string length m.
struct KrFactor {
  Node node;
  GaussianRational base;
  int length = 1;
};

enum class Verdict { Cyclic, Unknown };

struct PairReport {
  std::size_t first;   // index m of the earlier factor
  std::size_t second;  // index n > m
  GaussianRational difference;  // a_n - a_m
  CyclicitySet tested;
  bool member;
};

/// The condition is sufficient only, so a failed check yields Unknown rather than a negative verdict.
struct CyclicityCertificate {
  Verdict verdict = Verdict::Cyclic;
  std::vector<PairReport> pairs;
};

CyclicityCertificate check_tensor(const LieDatum& datum, const WeylWord& w0_word,
                                  const std::vector<KrFactor>& factors);

/// Roots of a numeric Drinfeld tuple as (node, root), by non-increasing real part; ties go to
/// the larger imaginary part, then the smaller node.
std::vector<std::pair<Node, GaussianRational>> weyl_module_order(const LieDatum& datum,
                                                                 const RationalTuple& pi);

/// Orders the roots of pi by weyl_module_order and certifies the resulting tensor product of
/// fundamental representations.
CyclicityCertificate check_drinfeld_tuple(const LieDatum& datum, const WeylWord& w0_word,
                                          const RationalTuple& pi);

}  // namespace yangian
