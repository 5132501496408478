#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "yangian/lie_data.hpp"
#include "yangian/ratfun.hpp"
#include "yangian/weyl.hpp"

namespace yangian {

/// T_j(P). For i != j the i-th component is multiplied by
///   P_j(u - d_i/2)                          if a_ij = -1,
///   P_j(u - 1) P_j(u)                       if a_ij = -2,
///   P_j(u - 3/2) P_j(u - 1/2) P_j(u + 1/2)  if a_ij = -3,
/// and the j-th component becomes 1 / P_j(u - d_j).
RationalTuple apply_generator(const LieDatum& datum, Node j, const RationalTuple& p);

/// T_w(P) = T_{r_1}(T_{r_2}(... T_{r_p}(P))); the empty word is the identity.
RationalTuple apply_word(const LieDatum& datum, const WeylWord& word, const RationalTuple& p);

/// Both sides of the braid relation between T_i and T_j, evaluated on p.
bool check_braid_relation(const LieDatum& datum, Node i, Node j, const RationalTuple& p);

/// T_j(p q) == T_j(p) T_j(q).
bool check_automorphism(const LieDatum& datum, Node j, const RationalTuple& p,
                        const RationalTuple& q);

/// Shape of the random tuples used by the verification harness.
struct TupleSampling {
  int max_factors_per_node = 3;
  int max_multiplicity = 3;  // multiplicities drawn from -max..max, zero excluded
  int max_denominator = 6;
  int max_numerator = 12;
  bool complex_roots = true;
};

/// Random tuple with numeric Gaussian-rational roots.
RationalTuple random_tuple(const LieDatum& datum, std::mt19937_64& rng,
                           const TupleSampling& shape = {});

struct BraidCounterexample {
  Node i;
  Node j;
  RationalTuple tuple;
};

struct BraidVerification {
  std::uint64_t checks = 0;
  std::optional<BraidCounterexample> failure;
  bool passed() const { return !failure.has_value(); }
};

/// Checks every braid relation on `iters` random tuples per unordered pair of nodes.
BraidVerification verify_braid_relations(const LieDatum& datum, int iters, std::uint64_t seed);

}  // namespace yangian
