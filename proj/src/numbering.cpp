#include "yangian/numbering.hpp"

#include "yangian/cyclicity.hpp"
#include "yangian/reference.hpp"

namespace yangian {

NumberingReport validate_numbering(const LieDatum& datum, const WeylWord& w0_word) {
  NumberingReport report;
  report.numbering = datum.numbering();
  report.length = static_cast<int>(w0_word.size());
  report.expected_length = datum.positive_root_count();
  report.reduced = is_reduced(datum, w0_word);
  if (!report.word_ok()) return report;
  const auto table = reference_table(datum.type());
  if (table.empty()) return report;
  // A convention under which some prefix component is not a polynomial matches no cell.
  std::vector<std::vector<CyclicitySet>> rows;
  try {
    for (Node b1 = 1; b1 <= datum.rank(); ++b1)
      rows.push_back(fundamental_row(datum, w0_word, b1));
  } catch (const Error&) {
    rows.assign(datum.rank(), std::vector<CyclicitySet>(datum.rank()));
  }
  for (const auto& cell : table) {
    ++report.cells_checked;
    auto computed = rows[cell.b1 - 1][cell.b2 - 1].values();
    auto published = expand_set_shorthand(cell.shorthand);
    if (computed != published)
      report.mismatches.push_back({cell.b1, cell.b2, std::move(computed), std::move(published)});
  }
  return report;
}

NumberingSelection select_numbering(const LieType& type) {
  NumberingSelection selection;
  const NumberingReport* best = nullptr;
  bool tie = false;
  std::string tried;
  for (const auto& tag : numbering_candidates(type)) {
    const LieDatum datum = make_lie_datum(type, tag);
    selection.candidates.push_back(validate_numbering(datum, longest_word(datum)));
    tried += (tried.empty() ? "" : ", ") + tag;
  }
  for (const auto& report : selection.candidates) {
    if (!report.word_ok()) continue;
    if (!best || report.cells_matching() > best->cells_matching()) {
      best = &report;
      tie = false;
    } else if (report.cells_matching() == best->cells_matching()) {
      tie = true;
    }
  }
  if (!best || tie)
    throw Error("no numbering convention for " + type.name() + " validates (tried " + tried + ")");
  selection.selected = best->numbering;
  return selection;
}

}  // namespace yangian
