#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace yangian {

/// Dynkin node, 1-based as in the usual numbering of simple roots.
using Node = int;

enum class Family { A, B, C, D, E, F, G };

/// A simple Lie algebra type such as A4 or E6.
struct LieType {
  Family family;
  int rank;

  /// "A4", "E6", "G2".
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Validates the rank constraints (A>=1, B/C>=2, D>=4, E6/E7/E8, F4, G2).
LieType make_lie_type(Family family, int rank);

/// Parses "E6", "g2", "A4"; a bare classical letter needs `rank` (0 = absent).
LieType parse_lie_type(std::string_view family, int rank = 0);

/// Cartan data in the convention a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i),
/// so that d_i * a_ij is symmetric with d_i proportional to the squared root length.
class LieDatum {
 public:
  LieDatum(LieType type, std::vector<std::vector<int>> cartan, std::vector<int> symmetrizers,
           std::string numbering);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::string& numbering() const { return numbering_; }

  int cartan(Node i, Node j) const;
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  int d(Node i) const;
  const std::vector<int>& symmetrizers() const { return d_; }

  bool contains(Node i) const { return i >= 1 && i <= rank(); }
  void require_node(Node i) const;

  /// Length of the alternating braid relation between T_i and T_j: 2, 3, 4 or 6.
  int braid_length(Node i, Node j) const;

  /// Number of positive roots, i.e. the length of the longest Weyl group element.
  int positive_root_count() const;

 private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::string numbering_;
};

/// Numbering conventions known for a type; the first entry is the default.
std::vector<std::string> numbering_candidates(const LieType& type);

/// The default convention for the type.
LieDatum make_lie_datum(const LieType& type);

/// A specific convention from numbering_candidates(type).
LieDatum make_lie_datum(const LieType& type, std::string_view numbering);

}  // namespace yangian
