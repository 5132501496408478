#include "yangian/lie_data.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "yangian/rational.hpp"

namespace yangian {

std::string LieType::name() const {
  static constexpr char letters[] = "ABCDEFG";
  return letters[static_cast<int>(family)] + std::to_string(rank);
}

LieType make_lie_type(Family family, int rank) {
  LieType t{family, rank};
  auto bad = [&](const std::string& rule) {
    return Error("invalid rank " + std::to_string(rank) + " for family " +
                 t.name().substr(0, 1) + ": " + rule);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw bad("rank must be >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) throw bad("rank must be >= 2");
      break;
    case Family::D:
      if (rank < 4) throw bad("rank must be >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw bad("rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) throw bad("rank must be 4");
      break;
    case Family::G:
      if (rank != 2) throw bad("rank must be 2");
      break;
  }
  return t;
}

LieType parse_lie_type(std::string_view family, int rank) {
  if (family.empty()) throw Error("missing Lie family");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
  if (letter < 'A' || letter > 'G') throw Error("unknown Lie family '" + std::string(family) + "'");
  auto fam = static_cast<Family>(letter - 'A');
  auto digits = family.substr(1);
  int embedded = 0;
  if (!digits.empty()) {
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error("unknown Lie family '" + std::string(family) + "'");
    embedded = std::stoi(std::string(digits));
  }
  if (embedded != 0 && rank != 0 && embedded != rank)
    throw Error("conflicting ranks for '" + std::string(family) + "' and " + std::to_string(rank));
  int r = embedded != 0 ? embedded : rank;
  if (r == 0) {
    if (fam == Family::F) r = 4;
    else if (fam == Family::G) r = 2;
    else throw Error("family " + std::string(1, letter) + " needs a rank");
  }
  return make_lie_type(fam, r);
}

LieDatum::LieDatum(LieType type, std::vector<std::vector<int>> cartan,
                   std::vector<int> symmetrizers, std::string numbering)
    : type_(type), cartan_(std::move(cartan)), d_(std::move(symmetrizers)),
      numbering_(std::move(numbering)) {
  const auto n = static_cast<std::size_t>(type_.rank);
  if (cartan_.size() != n || d_.size() != n) throw Error("Cartan data does not match rank");
  int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n) throw Error("Cartan matrix is not square");
    if (d_[i] <= 0) throw Error("symmetrizers must be positive");
    g = std::gcd(g, d_[i]);
    if (cartan_[i][i] != 2) throw Error("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int a = cartan_[i][j], b = cartan_[j][i];
      if (a > 0 || a < -3) throw Error("off-diagonal Cartan entry out of range");
      if ((a == 0) != (b == 0)) throw Error("Cartan matrix zero pattern is not symmetric");
      if (a * b > 3) throw Error("Cartan product a_ij*a_ji exceeds 3");
      if (d_[i] * a != d_[j] * b) throw Error("D*A is not symmetric");
    }
  }
  if (g != 1) throw Error("symmetrizers are not coprime");
}

int LieDatum::cartan(Node i, Node j) const {
  require_node(i);
  require_node(j);
  return cartan_[i - 1][j - 1];
}

int LieDatum::d(Node i) const {
  require_node(i);
  return d_[i - 1];
}

void LieDatum::require_node(Node i) const {
  if (!contains(i))
    throw Error("node " + std::to_string(i) + " out of range 1.." + std::to_string(rank()) +
                " for " + type_.name());
}

int LieDatum::braid_length(Node i, Node j) const {
  if (i == j) throw Error("braid relation needs distinct nodes");
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

int LieDatum::positive_root_count() const {
  const int l = rank();
  switch (type_.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

namespace {

using Edges = std::vector<std::pair<Node, Node>>;

Edges chain(int n) {
  Edges e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

// a_ij = -max(1, d_j / d_i) on every bond; the longer root carries the larger d.
LieDatum from_diagram(const LieType& type, const Edges& edges, std::vector<int> d,
                      std::string tag) {
  const int n = type.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [p, q] : edges) {
    int i = p - 1, j = q - 1;
    a[i][j] = -std::max(1, d[j] / d[i]);
    a[j][i] = -std::max(1, d[i] / d[j]);
  }
  return LieDatum(type, std::move(a), std::move(d), std::move(tag));
}

Edges e_bourbaki(int n) {
  Edges e{{1, 3}, {2, 4}};
  for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

// Chain 1..n-1 with node n hanging off the branch point.
Edges e_kac(int n) {
  Edges e = chain(n - 1);
  e.emplace_back(n == 8 ? 5 : 3, n);
  return e;
}

}  // namespace

std::vector<std::string> numbering_candidates(const LieType& type) {
  switch (type.family) {
    case Family::E: return {"bourbaki", "kac"};
    case Family::F: return {"bourbaki", "short-first"};
    case Family::G: return {"long-first", "bourbaki"};
    default: return {"bourbaki"};
  }
}

LieDatum make_lie_datum(const LieType& type) {
  return make_lie_datum(type, numbering_candidates(type).front());
}

LieDatum make_lie_datum(const LieType& t, std::string_view numbering) {
  const LieType type = make_lie_type(t.family, t.rank);
  const int l = type.rank;
  const std::string tag(numbering);
  auto unknown = [&] {
    return Error("unknown numbering '" + tag + "' for " + type.name());
  };
  switch (type.family) {
    case Family::A:
      if (tag != "bourbaki") throw unknown();
      return from_diagram(type, chain(l), std::vector<int>(l, 1), tag);
    case Family::B: {
      if (tag != "bourbaki") throw unknown();
      std::vector<int> d(l, 2);
      d.back() = 1;
      return from_diagram(type, chain(l), d, tag);
    }
    case Family::C: {
      if (tag != "bourbaki") throw unknown();
      std::vector<int> d(l, 1);
      d.back() = 2;
      return from_diagram(type, chain(l), d, tag);
    }
    case Family::D: {
      if (tag != "bourbaki") throw unknown();
      Edges e = chain(l - 1);
      e.emplace_back(l - 2, l);
      return from_diagram(type, e, std::vector<int>(l, 1), tag);
    }
    case Family::E:
      if (tag == "bourbaki") return from_diagram(type, e_bourbaki(l), std::vector<int>(l, 1), tag);
      if (tag == "kac") return from_diagram(type, e_kac(l), std::vector<int>(l, 1), tag);
      throw unknown();
    case Family::F:
      if (tag == "bourbaki") return from_diagram(type, chain(4), {2, 2, 1, 1}, tag);
      if (tag == "short-first") return from_diagram(type, chain(4), {1, 1, 2, 2}, tag);
      throw unknown();
    case Family::G:
      if (tag == "long-first") return from_diagram(type, chain(2), {3, 1}, tag);
      if (tag == "bourbaki") return from_diagram(type, chain(2), {1, 3}, tag);
      throw unknown();
  }
  throw unknown();
}

}  // namespace yangian
