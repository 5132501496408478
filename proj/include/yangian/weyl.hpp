#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "yangian/lie_data.hpp"

namespace yangian {

/// Coefficients of a weight in the fundamental-weight basis.
using WeightVector = std::vector<long>;

/// A word s_{r_1} s_{r_2} ... s_{r_p} in the simple reflections of one Lie type.
class WeylWord {
 public:
  WeylWord(LieType type, std::vector<Node> letters);

  const LieType& type() const { return type_; }
  const std::vector<Node>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// 1-based letter r_j.
  Node operator[](std::size_t j) const { return letters_.at(j - 1); }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend bool operator<(const WeylWord& a, const WeylWord& b) { return a.letters_ < b.letters_; }

 private:
  LieType type_;
  std::vector<Node> letters_;
};

/// Whitespace-separated (commas and brackets tolerated) 1-based node indices.
WeylWord parse_word(const LieDatum& datum, std::string_view text);

/// s_i(w) = w - w_i * alpha_i, with alpha_i read off column i of the Cartan matrix.
WeightVector simple_reflection(const LieDatum& datum, Node i, const WeightVector& w);

/// Applies the word as a product of reflections: the rightmost letter acts first.
WeightVector act(const LieDatum& datum, const WeylWord& word, const WeightVector& w);

/// Integer matrix of the word acting on fundamental-weight coordinates.
std::vector<std::vector<long>> word_matrix(const LieDatum& datum, const WeylWord& word);

/// True iff the word length equals the length of the element it represents.
bool is_reduced(const LieDatum& datum, const WeylWord& word);

/// Reduced word for w0 obtained by always peeling off the smallest left descent.
WeylWord generated_longest_word(const LieDatum& datum);

/// The catalog word for exceptional types, the generated word otherwise.
WeylWord longest_word(const LieDatum& datum);

/// Letters r_{j+1} ... r_p, for 0 <= j <= p.
WeylWord suffix(const WeylWord& word, std::size_t j);

/// Distinct reduced words reachable by braid moves, input first, in breadth-first order.
std::vector<WeylWord> braid_equivalent_words(const LieDatum& datum, const WeylWord& word,
                                             std::size_t budget);

}  // namespace yangian
