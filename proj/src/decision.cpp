#include "pls/decision.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "pls/error.hpp"

namespace pls {

namespace {

OrderConstraints constraints_from(const Commitments& commitments) {
  OrderConstraints out;
  out.reserve(commitments.size());
  for (const auto& [pair, chosen] : commitments)
    out.push_back({chosen, chosen == pair.first ? pair.second : pair.first});
  return out;
}

// Quotient of the sentences a decision about these patterns can touch.
// ¬-decreasing classes need the negation closure and the top/bot classes.
Quotient quotient_for(const std::vector<CollapsePattern>& patterns, ChoiceClass c,
                      std::size_t atom_limit) {
  std::vector<Sentence> universe = relevant_universe(patterns, false);
  if (c.tag == ClassTag::NegDecreasing) {
    universe.push_back(top());
    universe.push_back(bot());
    std::set<Sentence> closed(universe.begin(), universe.end());
    for (const Sentence& s : universe) closed.insert(neg(s));
    universe.assign(closed.begin(), closed.end());
  }
  return make_quotient(std::move(universe), atom_limit);
}

Quotient quotient_for_commitments(const Commitments& commitments, ChoiceClass c) {
  std::vector<CollapsePattern> carrier{CollapsePattern{top(), commitments}};
  return quotient_for(carrier, c, kDefaultAtomLimit);
}

// Cycle check on the committed winner->loser digraph (structural vertices).
bool commitments_acyclic(const Commitments& commitments, const Quotient& q) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [pair, chosen] : commitments) {
    const Sentence& loser = chosen == pair.first ? pair.second : pair.first;
    const auto a = q.find(chosen);
    const auto b = q.find(loser);
    if (!a || !b)
      throw DomainError("commitment sentence outside the universe: " +
                        (a ? loser.text() : chosen.text()));
    if (*a == *b) return false;
    edges.emplace(*a, *b);
  }
  // Kahn's algorithm; only acyclicity matters here.
  std::vector<std::vector<std::size_t>> next(q.universe.size());
  std::vector<std::size_t> indegree(q.universe.size(), 0);
  for (const auto& [a, b] : edges) {
    next[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < q.universe.size(); ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t j : next[i])
      if (--indegree[j] == 0) ready.push_back(j);
  }
  return seen == q.universe.size();
}

// Cross-class commitments must pick one side per class pair.
bool class_choices_consistent(const Commitments& commitments, const Quotient& q) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> winner;
  for (const auto& [pair, chosen] : commitments) {
    const auto a = q.find(pair.first);
    const auto b = q.find(pair.second);
    if (!a || !b)
      throw DomainError("commitment sentence outside the universe: " +
                        (a ? pair.second.text() : pair.first.text()));
    std::size_t ca = q.class_of[*a];
    std::size_t cb = q.class_of[*b];
    if (ca == cb) continue;  // within-class choices are free
    const std::size_t cw = q.class_of[*q.find(chosen)];
    if (cb < ca) std::swap(ca, cb);
    auto [it, inserted] = winner.emplace(std::make_pair(ca, cb), cw);
    if (!inserted && it->second != cw) return false;
  }
  return true;
}

ChoiceModel regular_table(const Commitments& commitments, const Quotient& q) {
  // Class-level winners: committed ones, then lower class id by default.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> winner;
  for (const auto& [pair, chosen] : commitments) {
    std::size_t ca = q.class_of[*q.find(pair.first)];
    std::size_t cb = q.class_of[*q.find(pair.second)];
    if (ca == cb) continue;
    const std::size_t cw = q.class_of[*q.find(chosen)];
    if (cb < ca) std::swap(ca, cb);
    winner.emplace(std::make_pair(ca, cb), cw);
  }
  std::vector<std::pair<PairKey, Sentence>> entries;
  for (std::size_t i = 0; i < q.universe.size(); ++i)
    for (std::size_t j = i + 1; j < q.universe.size(); ++j) {
      const PairKey key(q.universe[i], q.universe[j]);
      if (auto it = commitments.find(key); it != commitments.end()) {
        entries.push_back({key, it->second});
        continue;
      }
      std::size_t ca = q.class_of[i];
      std::size_t cb = q.class_of[j];
      if (ca == cb) {
        entries.push_back({key, q.universe[i]});  // free; take the lesser text
        continue;
      }
      const bool swapped = cb < ca;
      if (swapped) std::swap(ca, cb);
      std::size_t cw = ca;
      if (auto it = winner.find(std::make_pair(ca, cb)); it != winner.end())
        cw = it->second;
      entries.push_back({key, cw == q.class_of[i] ? q.universe[i] : q.universe[j]});
    }
  return ChoiceModel::table(entries);
}

ChoiceModel associative_extension(const Commitments& commitments, const Quotient& q) {
  // Topological order over the whole universe, smallest text first.
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [pair, chosen] : commitments) {
    const Sentence& loser = chosen == pair.first ? pair.second : pair.first;
    const auto a = q.find(chosen);
    const auto b = q.find(loser);
    if (!a || !b)
      throw DomainError("commitment sentence outside the universe: " +
                        (a ? loser.text() : chosen.text()));
    edges.emplace(*a, *b);
  }
  std::vector<std::vector<std::size_t>> next(q.universe.size());
  std::vector<std::size_t> indegree(q.universe.size(), 0);
  for (const auto& [a, b] : edges) {
    next[a].push_back(b);
    ++indegree[b];
  }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < q.universe.size(); ++i)
    if (indegree[i] == 0) ready.insert(i);
  std::vector<Sentence> order;
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(q.universe[i]);
    for (std::size_t j : next[i])
      if (--indegree[j] == 0) ready.insert(j);
  }
  if (order.size() != q.universe.size())
    throw DomainError("commitments are cyclic; no associative extension");
  return ChoiceModel::from_order(std::move(order));
}

}  // namespace

bool realizable_on(const Commitments& commitments, ChoiceClass c, const Quotient& q) {
  switch (c.tag) {
    case ClassTag::All: return true;
    case ClassTag::Associative: return commitments_acyclic(commitments, q);
    case ClassTag::Regular: return class_choices_consistent(commitments, q);
    case ClassTag::RegularAssociative:
      return build_regular_order(q, constraints_from(commitments)).has_value();
    case ClassTag::NegDecreasing:
      return build_neg_dec_regular_order(q, constraints_from(commitments), c.rule)
          .has_value();
  }
  throw Error("unreachable");
}

ChoiceModel extend_to_model_on(const Commitments& commitments, ChoiceClass c,
                               const Quotient& q) {
  switch (c.tag) {
    case ClassTag::All: {
      std::vector<std::pair<PairKey, Sentence>> entries;
      for (std::size_t i = 0; i < q.universe.size(); ++i)
        for (std::size_t j = i + 1; j < q.universe.size(); ++j) {
          const PairKey key(q.universe[i], q.universe[j]);
          auto it = commitments.find(key);
          entries.push_back({key, it != commitments.end() ? it->second : q.universe[i]});
        }
      return ChoiceModel::table(entries);
    }
    case ClassTag::Associative: return associative_extension(commitments, q);
    case ClassTag::Regular: {
      if (!class_choices_consistent(commitments, q))
        throw DomainError("commitments are not realizable by a regular model");
      return regular_table(commitments, q);
    }
    case ClassTag::RegularAssociative: {
      auto order = build_regular_order(q, constraints_from(commitments));
      if (!order)
        throw DomainError("commitments are not realizable by a regular order");
      return ChoiceModel::from_order(std::move(*order));
    }
    case ClassTag::NegDecreasing: {
      auto order = build_neg_dec_regular_order(q, constraints_from(commitments), c.rule);
      if (!order)
        throw DomainError(
            "commitments are not realizable by a ¬-decreasing regular order");
      return ChoiceModel::from_order(std::move(*order));
    }
  }
  throw Error("unreachable");
}

bool realizable(const Commitments& commitments, ChoiceClass c) {
  return realizable_on(commitments, c, quotient_for_commitments(commitments, c));
}

ChoiceModel extend_to_model(const Commitments& commitments, ChoiceClass c) {
  return extend_to_model_on(commitments, c, quotient_for_commitments(commitments, c));
}

namespace {

std::vector<std::string> sorted_atoms_of(const std::vector<Sentence>& sentences,
                                         std::size_t atom_limit) {
  std::set<std::string> names;
  for (const Sentence& s : sentences) names.merge(atom_names(s));
  if (names.size() > atom_limit)
    throw CapacityError("assignment search over " + std::to_string(names.size()) +
                        " atoms exceeds the limit of " + std::to_string(atom_limit));
  return {names.begin(), names.end()};
}

Assignment assignment_for(const std::vector<std::string>& atoms, std::uint64_t mask) {
  Assignment m;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    m.set(atoms[i], (mask >> i) & 1u);
  return m;
}

// First assignment over the atoms falsifying s, in counting order.
Assignment falsifying_assignment(const std::vector<std::string>& atoms,
                                 const Sentence& s) {
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Assignment m = assignment_for(atoms, mask);
    if (!eval_classical(m, s)) return m;
  }
  throw Error("no falsifying assignment for " + s.text());
}

}  // namespace

Verdict is_tautology(const Sentence& s, ChoiceClass c, const DecisionOptions& opts) {
  const auto patterns = enumerate_collapses(s, opts.max_patterns);
  const Quotient q = quotient_for(patterns, c, opts.atom_limit);
  const auto atoms = sorted_atoms_of({s}, opts.atom_limit);
  for (const CollapsePattern& p : patterns) {
    if (!realizable_on(p.commitments, c, q)) continue;
    if (is_tautology_classical(p.result, opts.atom_limit)) continue;
    Verdict v;
    v.value = false;
    v.assignment = falsifying_assignment(atoms, p.result);
    v.model = extend_to_model_on(p.commitments, c, q);
    return v;
  }
  return Verdict{true, std::nullopt, std::nullopt};
}

Verdict is_satisfiable(const std::vector<Sentence>& sentences, ChoiceClass c,
                       const DecisionOptions& opts) {
  std::vector<std::vector<CollapsePattern>> per_sentence;
  per_sentence.reserve(sentences.size());
  std::vector<CollapsePattern> all;
  std::uint64_t tuples = 1;
  for (const Sentence& s : sentences) {
    per_sentence.push_back(enumerate_collapses(s, opts.max_patterns));
    all.insert(all.end(), per_sentence.back().begin(), per_sentence.back().end());
    tuples *= per_sentence.back().size();
    if (tuples > opts.max_patterns)
      throw CapacityError("pattern combinations exceed the cap of " +
                          std::to_string(opts.max_patterns));
  }
  const Quotient q = quotient_for(all, c, opts.atom_limit);
  const auto atoms = sorted_atoms_of(sentences, opts.atom_limit);

  // Odometer over one pattern per sentence.
  std::vector<std::size_t> index(sentences.size(), 0);
  while (true) {
    Commitments merged;
    bool consistent = true;
    std::vector<Sentence> results;
    results.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size() && consistent; ++i) {
      const CollapsePattern& p = per_sentence[i][index[i]];
      results.push_back(p.result);
      for (const auto& [key, chosen] : p.commitments) {
        auto [it, inserted] = merged.emplace(key, chosen);
        if (!inserted && it->second != chosen) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent && realizable_on(merged, c, q)) {
      const std::uint64_t count = std::uint64_t{1} << atoms.size();
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        Assignment m = assignment_for(atoms, mask);
        bool all_true = true;
        for (const Sentence& r : results)
          if (!eval_classical(m, r)) {
            all_true = false;
            break;
          }
        if (all_true) {
          Verdict v;
          v.value = true;
          v.assignment = std::move(m);
          v.model = extend_to_model_on(merged, c, q);
          return v;
        }
      }
    }
    // Advance the odometer.
    std::size_t pos = 0;
    while (pos < index.size()) {
      if (++index[pos] < per_sentence[pos].size()) break;
      index[pos] = 0;
      ++pos;
    }
    if (pos == index.size()) break;
  }
  return Verdict{false, std::nullopt, std::nullopt};
}

Verdict entails(const std::vector<Sentence>& premises, const Sentence& conclusion,
                ChoiceClass c, const DecisionOptions& opts) {
  std::vector<Sentence> sentences = premises;
  sentences.push_back(neg(conclusion));
  Verdict counter = is_satisfiable(sentences, c, opts);
  Verdict v;
  v.value = !counter.value;
  v.assignment = std::move(counter.assignment);
  v.model = std::move(counter.model);
  return v;
}

Verdict equivalent_in(const Sentence& a, const Sentence& b, ChoiceClass c,
                      const DecisionOptions& opts) {
  Verdict forward = entails({a}, b, c, opts);
  if (!forward.value) return forward;
  return entails({b}, a, c, opts);
}

bool model_check(const Assignment& m, const ChoiceModel& f, const Sentence& s) {
  return eval_classical(m, collapse(f, s));
}

bool nary_sup_check(const ChoiceModel& f, const std::vector<Sentence>& sentences,
                    const Assignment& m) {
  if (!f.order_backed())
    throw DomainError("n-ary superposition needs an order-backed model");
  if (sentences.empty())
    throw DomainError("n-ary superposition needs at least one sentence");
  Sentence least = collapse(f, sentences.front());
  for (std::size_t i = 1; i < sentences.size(); ++i)
    least = f.choose(least, collapse(f, sentences[i]));
  return eval_classical(m, least);
}

Sentence interpret(const Sentence& s, SupReading reading) {
  if (s.is_classical()) return s;
  switch (s.kind()) {
    case Kind::Neg: return neg(interpret(s.child(), reading));
    case Kind::And:
      return conj(interpret(s.left(), reading), interpret(s.right(), reading));
    case Kind::Sup: {
      Sentence l = interpret(s.left(), reading);
      Sentence r = interpret(s.right(), reading);
      return reading == SupReading::AsAnd ? conj(std::move(l), std::move(r))
                                          : disj(std::move(l), std::move(r));
    }
    default: throw Error("unreachable");
  }
}

}  // namespace pls
