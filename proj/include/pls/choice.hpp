#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pls/sentence.hpp"
#include "pls/truth.hpp"

namespace pls {

// Unordered pair of classical sentences, stored in canonical-text order.
// {a,a} is a legal key for a choice table but never represents a free choice.
struct PairKey {
  Sentence first;
  Sentence second;

  PairKey(Sentence x, Sentence y);  // canonicalizes; requires classical members

  friend bool operator==(const PairKey& a, const PairKey& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator!=(const PairKey& a, const PairKey& b) { return !(a == b); }
  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return k.first.hash() * 1000003u ^ k.second.hash();
  }
};

// A choice function over pairs of classical sentences, either as an explicit
// finite table or backed by a duplicate-free sequence (earlier member wins).
// choose(a,a) is a for any model; other pairs must be covered.
class ChoiceModel {
 public:
  using Table = std::unordered_map<PairKey, Sentence, PairKeyHash>;

  // Validates that every chosen value is a member of its pair.
  static ChoiceModel table(const std::vector<std::pair<PairKey, Sentence>>& entries);
  // Validates that the sequence is duplicate-free and classical.
  static ChoiceModel from_order(std::vector<Sentence> order);

  bool order_backed() const { return order_.has_value(); }
  const std::vector<Sentence>& order() const;
  const Table& entries() const;

  Sentence choose(const Sentence& x, const Sentence& y) const;

 private:
  ChoiceModel() = default;
  std::optional<std::vector<Sentence>> order_;
  std::unordered_map<Sentence, std::size_t> positions_;  // order-backed only
  Table table_;
};

// ---------------------------------------------------------------------------
// Classes of choice functions, restricted to a finite universe.  A property
// holding on the universe is taken as membership; every such finite model
// extends to a full model of the same class.

enum class ClassTag { All, Associative, Regular, RegularAssociative, NegDecreasing };

// Placement rules for the tautology/contradiction classes in ¬-decreasing
// orders (only meaningful with ClassTag::NegDecreasing).
enum class TopBotRule { None, TopBeforeBot, BotBeforeTop, TopLeast, BotLeast };

struct ChoiceClass {
  ClassTag tag = ClassTag::All;
  TopBotRule rule = TopBotRule::None;

  friend bool operator==(const ChoiceClass& a, const ChoiceClass& b) {
    return a.tag == b.tag && a.rule == b.rule;
  }
};

// CLI-facing names: f, asso, reg, reg*, dec, dec-tb, dec-bt, dec-top, dec-bot.
std::optional<ChoiceClass> choice_class_from_name(const std::string& name);
std::string choice_class_name(ChoiceClass c);

// ---------------------------------------------------------------------------
// Predicates.  Finders return a counterexample, or nullopt when the property
// holds.  Universe members must be classical and covered by the model.

struct TripleWitness {
  Sentence a, b, c;
};
struct RegularityWitness {
  Sentence a, a_equiv, b;  // a ~ a_equiv but f(a,b) !~ f(a_equiv,b)
};
struct OrderWitness {
  Sentence a, b;
};

// f(f(a,b),c) == f(a,f(b,c)) for all universe triples.
std::optional<TripleWitness> find_associativity_failure(
    const ChoiceModel& f, const std::vector<Sentence>& universe);

// Same, with equivalence in place of structural equality.
std::optional<TripleWitness> find_essential_associativity_failure(
    const ChoiceModel& f, const std::vector<Sentence>& universe);

// Equivalent arguments must give equivalent choices.
std::optional<RegularityWitness> find_regularity_failure(
    const ChoiceModel& f, const std::vector<Sentence>& universe);
std::optional<RegularityWitness> find_regularity_failure(
    const ChoiceModel& f, const Quotient& q);

// Recover the strict total order induced by an associative model on the
// universe: a before b iff a != b and f(a,b) = a.  Throws DomainError with the
// witness triple if f is not associative there.
std::vector<Sentence> order_from_choice(const ChoiceModel& f,
                                        const std::vector<Sentence>& universe);

// The min-choice model of a duplicate-free order (alias for from_order).
ChoiceModel min_choice_from_order(std::vector<Sentence> order);

// A regular order keeps equivalence classes in contiguous blocks.  The
// witness exhibits a < between < a_equiv with a ~ a_equiv and a !~ between.
struct BlockWitness {
  Sentence a, between, a_equiv;
};
std::optional<BlockWitness> find_block_failure(const std::vector<Sentence>& order);
bool is_regular_order(const std::vector<Sentence>& order);

// ¬-decreasing: for inequivalent members a < b, the negation of b precedes the
// negation of a.  Negations are looked up structurally, falling back to
// double-negation elimination; throws DomainError if the order is not closed
// under negation in that sense.  The witness is an offending pair (a, b).
std::optional<OrderWitness> find_neg_decrease_failure(
    const std::vector<Sentence>& order);

// ---------------------------------------------------------------------------
// Order construction.  Constraints are (earlier, later) pairs over the
// quotient's universe; nullopt means no order satisfies them.

using OrderConstraints = std::vector<std::pair<Sentence, Sentence>>;

// Deterministic regular order extending the constraints: class blocks and
// members topologically sorted with canonical-text tie-breaking.
std::optional<std::vector<Sentence>> build_regular_order(
    const Quotient& q, const OrderConstraints& constraints);

// Deterministic regular ¬-decreasing order extending the constraints.  The
// universe must pair up classes with their negation classes.  Classes chosen
// to precede their negations form an initial segment; the remaining blocks
// mirror them in reverse.  A TopBotRule further pins the tautology /
// contradiction class blocks.
std::optional<std::vector<Sentence>> build_neg_dec_regular_order(
    const Quotient& q, const OrderConstraints& constraints,
    TopBotRule rule = TopBotRule::None);

// ---------------------------------------------------------------------------
// Membership of a model in a class, judged on the given universe.
bool member_of_class(const ChoiceModel& f, ChoiceClass c,
                     const std::vector<Sentence>& universe);

}  // namespace pls
