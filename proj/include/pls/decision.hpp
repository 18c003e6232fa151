#pragma once

#include <optional>
#include <vector>

#include "pls/choice.hpp"
#include "pls/collapse.hpp"
#include "pls/sentence.hpp"
#include "pls/truth.hpp"

namespace pls {

struct DecisionOptions {
  std::size_t max_patterns = kDefaultPatternCap;
  std::size_t atom_limit = kDefaultAtomLimit;
};

// Answer to a decision query.  The witness certifies the answer whenever one
// exists: a countermodel for a failed tautology/entailment, a model for a
// satisfiable set.  Witnesses are deterministic.
struct Verdict {
  bool value = false;
  std::optional<Assignment> assignment;
  std::optional<ChoiceModel> model;
};

// Can some model of the class honor exactly these commitments?  The universe
// is derived from the commitments themselves (closed under negation and
// extended with top/bot for the ¬-decreasing classes).
bool realizable(const Commitments& commitments, ChoiceClass c);

// A deterministic model of the class honoring the commitments; throws
// DomainError if there is none.
ChoiceModel extend_to_model(const Commitments& commitments, ChoiceClass c);

// Same, judged on an externally supplied quotient whose universe must contain
// every committed sentence.
bool realizable_on(const Commitments& commitments, ChoiceClass c, const Quotient& q);
ChoiceModel extend_to_model_on(const Commitments& commitments, ChoiceClass c,
                               const Quotient& q);

// True iff every model of the class makes s true under every assignment.
// On failure the witness falsifies s: model_check(assignment, model, s) is
// false and the model belongs to the class.
Verdict is_tautology(const Sentence& s, ChoiceClass c, const DecisionOptions& opts = {});

// True iff some class model and assignment make all sentences true together.
Verdict is_satisfiable(const std::vector<Sentence>& sentences, ChoiceClass c,
                       const DecisionOptions& opts = {});

// Entailment as unsatisfiability of premises + ~conclusion; a countermodel
// (premises true, conclusion false) accompanies a negative answer.
Verdict entails(const std::vector<Sentence>& premises, const Sentence& conclusion,
                ChoiceClass c, const DecisionOptions& opts = {});

// Mutual entailment; the witness separates the two on failure.
Verdict equivalent_in(const Sentence& a, const Sentence& b, ChoiceClass c,
                      const DecisionOptions& opts = {});

// Truth of s in the model pair (assignment, choice model).
bool model_check(const Assignment& m, const ChoiceModel& f, const Sentence& s);

// Truth of the n-ary superposition of the sentences (n >= 1) under an
// order-backed model: the earliest collapsed component decides.
bool nary_sup_check(const ChoiceModel& f, const std::vector<Sentence>& sentences,
                    const Assignment& m);

// Classical readings of superposition.
enum class SupReading { AsAnd, AsOr };
Sentence interpret(const Sentence& s, SupReading reading);

}  // namespace pls
