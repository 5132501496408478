#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yangian/lie_data.hpp"
#include "yangian/rational.hpp"

namespace yangian {

/// Expands the set-builder shorthand used by the published tables:
///   "a,b..c"        -> {a, b, b+1, ..., c}
///   "a..^b..c"      -> {a..b-1} u {b+1..c}   (a hat marks an omitted value)
/// Braces are optional. An item that starts with ".." or with a hatted value continues a
/// range from the value before the comma, e.g. "3/2,^7/2..29/2" is 3/2..29/2 without 7/2.
std::vector<GaussianRational> expand_set_shorthand(std::string_view text);

/// One transcribed cell of a published exceptional table.
struct ReferenceEntry {
  Node b1;
  Node b2;
  std::string shorthand;
};

/// Cells exactly as printed: for E6/E7/E8 only b1 <= b2 (the table is symmetric),
/// for F4 and G2 every ordered pair. Empty for classical types.
std::vector<ReferenceEntry> reference_table(const LieType& type);

/// Closed-form S(b1, b2) for the classical families A-D, as published.
std::vector<GaussianRational> closed_form_set(const LieType& type, Node b1, Node b2);

/// Published S(b1, b2) for any supported type: the transcribed table (with the E-type
/// symmetry applied) for exceptional types, the closed form otherwise.
std::optional<std::vector<GaussianRational>> reference_set(const LieType& type, Node b1, Node b2);

}  // namespace yangian
