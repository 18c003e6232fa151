#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pls/sentence.hpp"

namespace pls {

// Truth-table work is brute force; reject anything wider than this many atoms
// unless the caller raises the limit explicitly.
inline constexpr std::size_t kDefaultAtomLimit = 20;

// A truth assignment for atoms.  Evaluation demands every atom it meets.
struct Assignment {
  std::map<std::string, bool> values;

  bool get(const std::string& name) const;
  void set(const std::string& name, bool value) { values[name] = value; }
};

// Evaluate a classical sentence (top is true, bot is false).
// Throws DomainError if s has a Sup node or mentions an unassigned atom.
bool eval_classical(const Assignment& m, const Sentence& s);

// Classical tautology by truth table over the atoms of s.
bool is_tautology_classical(const Sentence& s,
                            std::size_t atom_limit = kDefaultAtomLimit);

// Classical equivalence over the union of the two sentences' atoms.
bool are_equivalent(const Sentence& a, const Sentence& b,
                    std::size_t atom_limit = kDefaultAtomLimit);

// Joint satisfiability of classical sentences; returns the first satisfying
// assignment in enumeration order (atoms sorted, counting order), or nullopt.
std::optional<Assignment> satisfiable_classical(
    const std::vector<Sentence>& sentences,
    std::size_t atom_limit = kDefaultAtomLimit);

// Universe partitioned by classical equivalence.  Classes are numbered by the
// canonical-text order of their first member; representatives are the least
// member of each class.
struct Quotient {
  std::vector<Sentence> universe;  // deduplicated, canonical-text order
  std::vector<std::size_t> class_of;
  std::vector<Sentence> representative;
  std::vector<std::vector<std::size_t>> class_members;

  std::size_t class_count() const { return representative.size(); }
  // Index of a structurally identical universe member.
  std::optional<std::size_t> find(const Sentence& s) const;
  // Class holding sentences equivalent to s, if any member is.
  std::optional<std::size_t> find_class_equivalent(const Sentence& s) const;
};

Quotient make_quotient(std::vector<Sentence> universe,
                       std::size_t atom_limit = kDefaultAtomLimit);

}  // namespace pls
