#pragma once

#include <string>
#include <vector>

#include "yangian/lie_data.hpp"
#include "yangian/rational.hpp"
#include "yangian/weyl.hpp"

namespace yangian {

struct TableMismatch {
  Node b1;
  Node b2;
  std::vector<GaussianRational> computed;
  std::vector<GaussianRational> published;
};

/// Outcome of checking a numbering convention against a w0 word (and, for exceptional
/// types, against the published S-tables).
struct NumberingReport {
  std::string numbering;
  bool reduced = false;
  int length = 0;
  int expected_length = 0;
  int cells_checked = 0;
  std::vector<TableMismatch> mismatches;

  bool word_ok() const { return reduced && length == expected_length; }
  bool valid() const { return word_ok() && mismatches.empty(); }
  int cells_matching() const { return cells_checked - static_cast<int>(mismatches.size()); }
};

NumberingReport validate_numbering(const LieDatum& datum, const WeylWord& w0_word);

struct NumberingSelection {
  std::string selected;
  std::vector<NumberingReport> candidates;
};

/// Tries every candidate convention with the catalog word. The selection is the unique
/// candidate whose word is reduced of full length and which agrees with the most published
/// cells; throws when none has a valid word or the best agreement is tied.
NumberingSelection select_numbering(const LieType& type);

}  // namespace yangian
