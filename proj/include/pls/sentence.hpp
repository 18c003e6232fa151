#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace pls {

enum class Kind { Atom, Top, Bot, Neg, And, Sup };

// Immutable sentence of the extended language: classical connectives plus the
// binary superposition connective (printed '|').  Disjunction, implication,
// biconditional and the dual of superposition ('@') are not node kinds; the
// parser and the helper constructors below rewrite them into Neg/And/Sup.
//
// Sentences are cheap to copy (shared immutable tree) and safe to share
// across threads.  Equality is structural; the canonical text form is unique
// per structure, so text comparison and structural comparison coincide.
class Sentence {
 public:
  Kind kind() const;
  const std::string& name() const;   // Atom only
  const Sentence& child() const;     // Neg only
  const Sentence& left() const;      // And / Sup
  const Sentence& right() const;     // And / Sup

  // Fully parenthesized canonical form; parsing it reproduces the sentence.
  const std::string& text() const;

  bool is_classical() const;  // no Sup node anywhere
  int sup_count() const;      // number of Sup nodes
  std::size_t hash() const;

  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.node_ == b.node_ || (a.hash() == b.hash() && a.text() == b.text());
  }
  friend bool operator!=(const Sentence& a, const Sentence& b) { return !(a == b); }
  // Canonical-text order; used wherever a deterministic order is needed.
  friend bool operator<(const Sentence& a, const Sentence& b) {
    return a.node_ != b.node_ && a.text() < b.text();
  }

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Sentence wrap(Kind kind, std::string name, std::vector<Sentence> kids,
                       std::string text, int sups);
  std::shared_ptr<const Node> node_;

  friend Sentence atom(const std::string&);
  friend Sentence top();
  friend Sentence bot();
  friend Sentence neg(Sentence);
  friend Sentence conj(Sentence, Sentence);
  friend Sentence sup(Sentence, Sentence);
};

// Core constructors.
Sentence atom(const std::string& name);  // name must match [a-z][a-z0-9_]*, not top/bot
Sentence top();
Sentence bot();
Sentence neg(Sentence s);
Sentence conj(Sentence lhs, Sentence rhs);
Sentence sup(Sentence lhs, Sentence rhs);

// Derived constructors (eagerly rewritten).
Sentence disj(Sentence lhs, Sentence rhs);      // a \/ b  ->  ~(~a & ~b)
Sentence implies(Sentence lhs, Sentence rhs);   // a -> b  ->  ~(a & ~b)
Sentence iff(Sentence lhs, Sentence rhs);       // a <-> b ->  (a -> b) & (b -> a)
Sentence dual_sup(Sentence lhs, Sentence rhs);  // a @ b   ->  ~(~a | ~b)

// Atom names occurring in s, sorted.
std::set<std::string> atom_names(const Sentence& s);

// All distinct subsentences of s (including s itself), in canonical-text order.
std::vector<Sentence> subsentences(const Sentence& s);

// Replace every occurrence of target in phi by replacement.  Occurrences of a
// fixed sentence are always pairwise disjoint, so the result is unambiguous.
Sentence substitute(const Sentence& phi, const Sentence& target,
                    const Sentence& replacement);

// The dual map: fixes classical sentences, commutes with Neg and And, and
// sends a|b to the rewritten form of (dual a) @ (dual b).
Sentence dual(const Sentence& s);

// Remove all double negations (~~x becomes x, recursively).
Sentence strip_double_neg(const Sentence& s);

}  // namespace pls

template <>
struct std::hash<pls::Sentence> {
  std::size_t operator()(const pls::Sentence& s) const { return s.hash(); }
};
