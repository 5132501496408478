#include "yangian/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <string>

#include "yangian/rational.hpp"

namespace yangian {

WeylWord::WeylWord(LieType type, std::vector<Node> letters)
    : type_(type), letters_(std::move(letters)) {
  for (Node r : letters_)
    if (r < 1 || r > type_.rank)
      throw Error("letter " + std::to_string(r) + " out of range 1.." + std::to_string(type_.rank) +
                  " for " + type_.name());
}

WeylWord parse_word(const LieDatum& datum, std::string_view text) {
  std::vector<Node> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error("malformed word letter '" + token + "'");
    letters.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']') flush();
    else token += c;
  }
  flush();
  return WeylWord(datum.type(), std::move(letters));
}

WeightVector simple_reflection(const LieDatum& datum, Node i, const WeightVector& w) {
  datum.require_node(i);
  if (static_cast<int>(w.size()) != datum.rank()) throw Error("weight vector has wrong length");
  WeightVector out = w;
  const long c = w[i - 1];
  for (int k = 0; k < datum.rank(); ++k) out[k] -= c * datum.cartan(k + 1, i);
  return out;
}

WeightVector act(const LieDatum& datum, const WeylWord& word, const WeightVector& w) {
  WeightVector v = w;
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
    v = simple_reflection(datum, *it, v);
  return v;
}

std::vector<std::vector<long>> word_matrix(const LieDatum& datum, const WeylWord& word) {
  const int n = datum.rank();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int col = 0; col < n; ++col) {
    WeightVector e(n, 0);
    e[col] = 1;
    auto image = act(datum, word, e);
    for (int row = 0; row < n; ++row) m[row][col] = image[row];
  }
  return m;
}

bool is_reduced(const LieDatum& datum, const WeylWord& word) {
  if (word.type() != datum.type()) throw Error("word and datum have different types");
  // Left-multiplying x by s_i lengthens it iff <x(rho), alpha_i^vee> > 0.
  WeightVector v(datum.rank(), 1);
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    if (v[*it - 1] <= 0) return false;
    v = simple_reflection(datum, *it, v);
  }
  return true;
}

WeylWord generated_longest_word(const LieDatum& datum) {
  // Start from w0(rho) = -rho and strip the smallest left descent until rho is reached.
  WeightVector v(datum.rank(), -1);
  std::vector<Node> letters;
  for (;;) {
    auto neg = std::find_if(v.begin(), v.end(), [](long x) { return x < 0; });
    if (neg == v.end()) break;
    Node i = static_cast<Node>(neg - v.begin()) + 1;
    letters.push_back(i);
    v = simple_reflection(datum, i, v);
  }
  return WeylWord(datum.type(), std::move(letters));
}

namespace {

const std::vector<Node>& e6_word() {
  static const std::vector<Node> w{1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5,
                                   4, 2, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1};
  return w;
}

const std::vector<Node>& e7_word() {
  static const std::vector<Node> w = [] {
    auto v = e6_word();
    v.insert(v.end(), {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5,
                       6, 7});
    return v;
  }();
  return w;
}

const std::vector<Node>& e8_word() {
  static const std::vector<Node> w = [] {
    auto v = e7_word();
    v.insert(v.end(), {8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4,
                       5, 6, 7, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4,
                       2, 3, 4, 5, 6, 7, 8});
    return v;
  }();
  return w;
}

}  // namespace

WeylWord longest_word(const LieDatum& datum) {
  const auto& t = datum.type();
  switch (t.family) {
    case Family::E:
      return WeylWord(t, t.rank == 6 ? e6_word() : t.rank == 7 ? e7_word() : e8_word());
    case Family::F:
      return WeylWord(t, {1, 2, 1, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4});
    case Family::G:
      return WeylWord(t, {2, 1, 2, 1, 2, 1});
    default:
      return generated_longest_word(datum);
  }
}

WeylWord suffix(const WeylWord& word, std::size_t j) {
  if (j > word.size())
    throw Error("suffix index " + std::to_string(j) + " exceeds word length " +
                std::to_string(word.size()));
  return WeylWord(word.type(), std::vector<Node>(word.letters().begin() + static_cast<long>(j),
                                                 word.letters().end()));
}

std::vector<WeylWord> braid_equivalent_words(const LieDatum& datum, const WeylWord& word,
                                             std::size_t budget) {
  if (!is_reduced(datum, word)) throw Error("braid_equivalent_words needs a reduced word");
  std::vector<WeylWord> out;
  if (budget == 0) return out;
  std::set<std::vector<Node>> seen{word.letters()};
  std::deque<std::vector<Node>> queue{word.letters()};
  while (!queue.empty() && out.size() < budget) {
    auto current = std::move(queue.front());
    queue.pop_front();
    out.emplace_back(word.type(), current);
    const std::size_t p = current.size();
    for (std::size_t pos = 0; pos + 1 < p; ++pos) {
      Node i = current[pos], j = current[pos + 1];
      if (i == j) continue;
      const std::size_t m = static_cast<std::size_t>(datum.braid_length(i, j));
      if (pos + m > p) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < m && alternating; ++k)
        alternating = current[pos + k] == (k % 2 == 0 ? i : j);
      if (!alternating) continue;
      auto next = current;
      for (std::size_t k = 0; k < m; ++k) next[pos + k] = (k % 2 == 0 ? j : i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace yangian
