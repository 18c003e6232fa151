#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pls/decision.hpp"
#include "pls/sentence.hpp"

namespace pls {

// Axiom schemes.  PL1-PL6 are the classical base (implication, negation and
// conjunction); S1-S5 govern superposition; S6/S6p/S7/S7p are the top/bot
// placement schemes, recognizable but not part of any proof system below.
enum class SchemeId {
  PL1, PL2, PL3, PL4, PL5, PL6,
  S1, S2, S3, S4, S5,
  S6, S6p, S7, S7p,
};

std::optional<SchemeId> scheme_from_name(const std::string& name);
std::string scheme_name(SchemeId id);
const std::vector<SchemeId>& all_schemes();

// Metavariable bindings found by matching: phi/psi/sigma range over all
// sentences, alpha (S6p/S7p) over classical sentences only.
using Bindings = std::map<std::string, Sentence>;

// Bindings under which s is exactly an instance of the scheme, if any.
std::optional<Bindings> match_scheme(const Sentence& s, SchemeId id);

// Proof systems.  K0 proves with MP only; K1-K3 add the SV rule; K2 adds
// scheme S4 and K3 further adds S5.
enum class SystemId { K0, K1, K2, K3 };

std::optional<SystemId> system_from_name(const std::string& name);
std::string system_name(SystemId id);
const std::vector<SchemeId>& axiom_schemes(SystemId system);
bool scheme_in_system(SchemeId id, SystemId system);

// The class a system is sound for (K0: every choice model, K1: regular,
// K2: regular+associative, K3: ¬-decreasing).
ChoiceClass sound_class(SystemId system);

struct Justification {
  enum class Kind { Premise, Axiom, MP, SV };
  Kind kind = Kind::Premise;
  SchemeId scheme = SchemeId::PL1;  // Axiom
  std::size_t i = 0;                // MP antecedent line / SV cited line
  std::size_t j = 0;                // MP implication line
};

struct ProofLine {
  std::size_t index;  // user-visible line number
  Sentence sentence;
  Justification justification;
};

struct ProofScript {
  SystemId system = SystemId::K0;
  std::vector<Sentence> premises;
  std::vector<ProofLine> lines;
};

// Parse the line-oriented proof format:
//   system K0|K1|K2|K3
//   premise <sentence>            (zero or more)
//   <n> <sentence> ; premise | ax <SchemeId> | mp <i> <j> | sv <i>
// '#' starts a comment; blank lines are skipped.  Line numbers must be
// strictly increasing and citations must point at earlier lines.  Throws
// ParseError on malformed input.
ProofScript parse_proof(const std::string& text);
ProofScript read_proof_file(const std::string& path);

// Verdict of checking: the first failing line (user numbering) and a
// machine-readable reason code, one of bad-premise, bad-scheme, bad-mp,
// sv-shape, sv-side-condition-failed, sv-not-available-in-K0.
struct ProofCheck {
  bool accepted = false;
  std::size_t line = 0;
  std::string reason;
};

ProofCheck check_proof(const ProofScript& script, const DecisionOptions& opts = {});

// Semantic oracles for K0, which is sound and complete for the full class of
// choice models: provability coincides with F-tautology, consistency with
// F-satisfiability.
bool theoremhood_k0(const Sentence& s, const DecisionOptions& opts = {});
bool consistent_k0(const std::vector<Sentence>& sigma,
                   const DecisionOptions& opts = {});

}  // namespace pls
