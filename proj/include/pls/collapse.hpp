#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "pls/choice.hpp"
#include "pls/sentence.hpp"

namespace pls {

inline constexpr std::size_t kDefaultPatternCap = 65536;

// Choices recorded while collapsing: each genuine two-member pair met at a
// superposition node, mapped to the member that was picked.  Never keyed by
// {a,a}.  Ordered map so iteration, printing and merging are deterministic.
using Commitments = std::map<PairKey, Sentence>;

// Collapse s to the classical sentence the model selects: classical parts are
// untouched, negation and conjunction pass through, and each superposition
// resolves to the model's choice between its collapsed sides.
Sentence collapse(const ChoiceModel& f, const Sentence& s);

// One possible collapse of a sentence, together with the exact choices that
// produce it.  Any model consistent with the commitments collapses the
// sentence to `result`.
struct CollapsePattern {
  Sentence result;
  Commitments commitments;

  friend bool operator==(const CollapsePattern& a, const CollapsePattern& b) {
    return a.result == b.result && a.commitments == b.commitments;
  }
};

// All collapse patterns of s, deduplicated and in a fixed canonical order.
// The pattern count is bounded by 2^sup_count(s); throws CapacityError when
// intermediate counts would exceed max_patterns.
std::vector<CollapsePattern> enumerate_collapses(
    const Sentence& s, std::size_t max_patterns = kDefaultPatternCap);

// Every sentence occurring in the patterns' commitments or results; with
// close_under_negation, also the negation of each of those.
std::vector<Sentence> relevant_universe(const std::vector<CollapsePattern>& patterns,
                                        bool close_under_negation);

}  // namespace pls
