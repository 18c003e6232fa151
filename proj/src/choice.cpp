#include "pls/choice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

#include "pls/error.hpp"

namespace pls {

PairKey::PairKey(Sentence x, Sentence y)
    : first(std::move(x)), second(std::move(y)) {
  if (!first.is_classical() || !second.is_classical())
    throw DomainError("choice pairs must be classical: {" + first.text() + ", " +
                      second.text() + "}");
  if (second < first) std::swap(first, second);
}

ChoiceModel ChoiceModel::table(const std::vector<std::pair<PairKey, Sentence>>& entries) {
  ChoiceModel f;
  for (const auto& [key, chosen] : entries) {
    if (chosen != key.first && chosen != key.second)
      throw DomainError("chosen sentence " + chosen.text() + " is not a member of {" +
                        key.first.text() + ", " + key.second.text() + "}");
    auto [it, inserted] = f.table_.emplace(key, chosen);
    if (!inserted && it->second != chosen)
      throw DomainError("conflicting choices for {" + key.first.text() + ", " +
                        key.second.text() + "}");
  }
  return f;
}

ChoiceModel ChoiceModel::from_order(std::vector<Sentence> order) {
  ChoiceModel f;
  f.positions_.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!order[i].is_classical())
      throw DomainError("order members must be classical: " + order[i].text());
    if (!f.positions_.emplace(order[i], i).second)
      throw DomainError("duplicate order member: " + order[i].text());
  }
  f.order_ = std::move(order);
  return f;
}

const std::vector<Sentence>& ChoiceModel::order() const {
  if (!order_) throw DomainError("choice model is not order-backed");
  return *order_;
}

const ChoiceModel::Table& ChoiceModel::entries() const {
  if (order_) throw DomainError("choice model is not an explicit table");
  return table_;
}

Sentence ChoiceModel::choose(const Sentence& x, const Sentence& y) const {
  if (x == y) return x;
  if (order_) {
    auto ix = positions_.find(x);
    auto iy = positions_.find(y);
    if (ix == positions_.end())
      throw DomainError("sentence not in the backing order: " + x.text());
    if (iy == positions_.end())
      throw DomainError("sentence not in the backing order: " + y.text());
    return ix->second < iy->second ? x : y;
  }
  auto it = table_.find(PairKey(x, y));
  if (it == table_.end())
    throw DomainError("pair not covered by the choice table: {" + x.text() + ", " +
                      y.text() + "}");
  return it->second;
}

// ---------------------------------------------------------------------------

std::optional<ChoiceClass> choice_class_from_name(const std::string& name) {
  if (name == "f") return ChoiceClass{ClassTag::All, TopBotRule::None};
  if (name == "asso") return ChoiceClass{ClassTag::Associative, TopBotRule::None};
  if (name == "reg") return ChoiceClass{ClassTag::Regular, TopBotRule::None};
  if (name == "reg*") return ChoiceClass{ClassTag::RegularAssociative, TopBotRule::None};
  if (name == "dec") return ChoiceClass{ClassTag::NegDecreasing, TopBotRule::None};
  if (name == "dec-tb") return ChoiceClass{ClassTag::NegDecreasing, TopBotRule::TopBeforeBot};
  if (name == "dec-bt") return ChoiceClass{ClassTag::NegDecreasing, TopBotRule::BotBeforeTop};
  if (name == "dec-top") return ChoiceClass{ClassTag::NegDecreasing, TopBotRule::TopLeast};
  if (name == "dec-bot") return ChoiceClass{ClassTag::NegDecreasing, TopBotRule::BotLeast};
  return std::nullopt;
}

std::string choice_class_name(ChoiceClass c) {
  switch (c.tag) {
    case ClassTag::All: return "f";
    case ClassTag::Associative: return "asso";
    case ClassTag::Regular: return "reg";
    case ClassTag::RegularAssociative: return "reg*";
    case ClassTag::NegDecreasing:
      switch (c.rule) {
        case TopBotRule::None: return "dec";
        case TopBotRule::TopBeforeBot: return "dec-tb";
        case TopBotRule::BotBeforeTop: return "dec-bt";
        case TopBotRule::TopLeast: return "dec-top";
        case TopBotRule::BotLeast: return "dec-bot";
      }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------

std::optional<TripleWitness> find_associativity_failure(
    const ChoiceModel& f, const std::vector<Sentence>& universe) {
  for (const Sentence& a : universe)
    for (const Sentence& b : universe)
      for (const Sentence& c : universe)
        if (f.choose(f.choose(a, b), c) != f.choose(a, f.choose(b, c)))
          return TripleWitness{a, b, c};
  return std::nullopt;
}

std::optional<TripleWitness> find_essential_associativity_failure(
    const ChoiceModel& f, const std::vector<Sentence>& universe) {
  for (const Sentence& a : universe)
    for (const Sentence& b : universe)
      for (const Sentence& c : universe)
        if (!are_equivalent(f.choose(f.choose(a, b), c), f.choose(a, f.choose(b, c))))
          return TripleWitness{a, b, c};
  return std::nullopt;
}

std::optional<RegularityWitness> find_regularity_failure(
    const ChoiceModel& f, const std::vector<Sentence>& universe) {
  return find_regularity_failure(f, make_quotient(universe));
}

std::optional<RegularityWitness> find_regularity_failure(const ChoiceModel& f,
                                                         const Quotient& q) {
  const auto& u = q.universe;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (q.class_of[i] != q.class_of[j] || i == j) continue;
      for (const Sentence& b : u)
        if (!are_equivalent(f.choose(u[i], b), f.choose(u[j], b)))
          return RegularityWitness{u[i], u[j], b};
    }
  return std::nullopt;
}

std::vector<Sentence> order_from_choice(const ChoiceModel& f,
                                        const std::vector<Sentence>& universe) {
  if (auto w = find_associativity_failure(f, universe))
    throw DomainError("choice model is not associative on the universe; witness (" +
                      w->a.text() + ", " + w->b.text() + ", " + w->c.text() + ")");
  std::vector<Sentence> order = universe;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::sort(order.begin(), order.end(), [&f](const Sentence& a, const Sentence& b) {
    return a != b && f.choose(a, b) == a;
  });
  return order;
}

ChoiceModel min_choice_from_order(std::vector<Sentence> order) {
  return ChoiceModel::from_order(std::move(order));
}

std::optional<BlockWitness> find_block_failure(const std::vector<Sentence>& order) {
  const Quotient q = make_quotient(order);
  // Walk the order; a class may not resume once another class has started.
  std::vector<std::optional<std::size_t>> last_seen(q.class_count());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t c = q.class_of[*q.find(order[pos])];
    if (last_seen[c] && *last_seen[c] + 1 != pos) {
      // order[pos] ~ some earlier member with a foreign member in between.
      for (std::size_t back = *last_seen[c] + 1; back < pos; ++back)
        if (!are_equivalent(order[back], order[pos]))
          return BlockWitness{order[*last_seen[c]], order[back], order[pos]};
    }
    last_seen[c] = pos;
  }
  return std::nullopt;
}

bool is_regular_order(const std::vector<Sentence>& order) {
  return !find_block_failure(order).has_value();
}

namespace {

// Negation lookup inside a finite universe: structural negation if present,
// else strip one double negation.  Position map keyed structurally.
std::optional<std::size_t> neg_position(
    const std::unordered_map<Sentence, std::size_t>& pos, const Sentence& s) {
  auto it = pos.find(neg(s));
  if (it != pos.end()) return it->second;
  if (s.kind() == Kind::Neg) {
    it = pos.find(s.child());
    if (it != pos.end()) return it->second;
  }
  return std::nullopt;
}

}  // namespace

std::optional<OrderWitness> find_neg_decrease_failure(
    const std::vector<Sentence>& order) {
  std::unordered_map<Sentence, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos.emplace(order[i], i);

  std::vector<std::size_t> neg_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto ni = neg_position(pos, order[i]);
    if (!ni)
      throw DomainError("order is not closed under negation: no counterpart for " +
                        order[i].text());
    neg_of[i] = *ni;
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (are_equivalent(order[i], order[j])) continue;
      if (neg_of[j] >= neg_of[i]) return OrderWitness{order[i], order[j]};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// Kahn's algorithm with a smallest-index heap so output is deterministic.
std::optional<std::vector<std::size_t>> topological_order(
    std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> next(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : edges) {
    next[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> out;
  out.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    out.push_back(i);
    for (std::size_t j : next[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (out.size() != n) return std::nullopt;  // cycle
  return out;
}

struct SplitConstraints {
  std::set<std::pair<std::size_t, std::size_t>> class_edges;  // between classes
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> within;  // member indices
  bool impossible = false;  // some constraint demands a < a
};

SplitConstraints split_constraints(const Quotient& q,
                                   const OrderConstraints& constraints) {
  SplitConstraints s;
  s.within.resize(q.class_count());
  for (const auto& [before, after] : constraints) {
    const auto ib = q.find(before);
    const auto ia = q.find(after);
    if (!ib || !ia)
      throw DomainError("constraint endpoint outside the universe: " +
                        (ib ? after.text() : before.text()));
    if (*ib == *ia) {
      s.impossible = true;
      return s;
    }
    const std::size_t cb = q.class_of[*ib];
    const std::size_t ca = q.class_of[*ia];
    if (cb == ca)
      s.within[cb].emplace(*ib, *ia);
    else
      s.class_edges.emplace(cb, ca);
  }
  return s;
}

// Member order within each class: constraint-respecting, text-tie-broken.
std::optional<std::vector<std::vector<std::size_t>>> block_orders(
    const Quotient& q, const SplitConstraints& s) {
  std::vector<std::vector<std::size_t>> blocks(q.class_count());
  for (std::size_t c = 0; c < q.class_count(); ++c) {
    const auto& members = q.class_members[c];
    std::set<std::pair<std::size_t, std::size_t>> local;
    for (const auto& [a, b] : s.within[c]) {
      const auto pa = std::find(members.begin(), members.end(), a) - members.begin();
      const auto pb = std::find(members.begin(), members.end(), b) - members.begin();
      local.emplace(static_cast<std::size_t>(pa), static_cast<std::size_t>(pb));
    }
    auto topo = topological_order(members.size(), local);
    if (!topo) return std::nullopt;
    blocks[c].reserve(members.size());
    for (std::size_t k : *topo) blocks[c].push_back(members[k]);
  }
  return blocks;
}

std::vector<Sentence> assemble(const Quotient& q,
                               const std::vector<std::size_t>& class_order,
                               const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<Sentence> out;
  out.reserve(q.universe.size());
  for (std::size_t c : class_order)
    for (std::size_t i : blocks[c]) out.push_back(q.universe[i]);
  return out;
}

}  // namespace

std::optional<std::vector<Sentence>> build_regular_order(
    const Quotient& q, const OrderConstraints& constraints) {
  const SplitConstraints s = split_constraints(q, constraints);
  if (s.impossible) return std::nullopt;
  const auto class_order = topological_order(q.class_count(), s.class_edges);
  if (!class_order) return std::nullopt;
  const auto blocks = block_orders(q, s);
  if (!blocks) return std::nullopt;
  return assemble(q, *class_order, *blocks);
}

std::optional<std::vector<Sentence>> build_neg_dec_regular_order(
    const Quotient& q, const OrderConstraints& constraints, TopBotRule rule) {
  const SplitConstraints s = split_constraints(q, constraints);
  if (s.impossible) return std::nullopt;
  const auto blocks = block_orders(q, s);
  if (!blocks) return std::nullopt;

  const std::size_t k = q.class_count();
  // Negation counterpart of every class; the universe must provide one.
  std::vector<std::size_t> neg_class(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto nc = q.find_class_equivalent(neg(q.representative[c]));
    if (!nc)
      throw DomainError("universe has no negation class for " +
                        q.representative[c].text());
    if (*nc == c)
      throw DomainError("sentence equivalent to its own negation: " +
                        q.representative[c].text());
    neg_class[c] = *nc;
  }

  // Classes pair with their negation classes; an order fixing one of each
  // pair as its initial segment determines the rest by mirroring.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t c = 0; c < k; ++c)
    if (c < neg_class[c]) pairs.push_back({c, neg_class[c]});
  if (pairs.size() * 2 != k)
    throw DomainError("universe classes do not pair up under negation");
  const std::size_t half = pairs.size();
  if (half > 16)
    throw CapacityError("too many class pairs for arrangement search: " +
                        std::to_string(half));

  const auto top_class = q.find_class_equivalent(top());
  const auto bot_class = q.find_class_equivalent(bot());

  const auto admissible = [&](const std::vector<std::size_t>& arrangement) {
    std::vector<std::size_t> position(k);
    for (std::size_t i = 0; i < k; ++i) position[arrangement[i]] = i;
    for (const auto& [a, b] : s.class_edges)
      if (position[a] >= position[b]) return false;
    switch (rule) {
      case TopBotRule::None: break;
      case TopBotRule::TopBeforeBot:
        if (top_class && bot_class && position[*top_class] >= position[*bot_class])
          return false;
        break;
      case TopBotRule::BotBeforeTop:
        if (top_class && bot_class && position[*bot_class] >= position[*top_class])
          return false;
        break;
      case TopBotRule::TopLeast:
        if (top_class && position[*top_class] != 0) return false;
        break;
      case TopBotRule::BotLeast:
        if (bot_class && position[*bot_class] != 0) return false;
        break;
    }
    return true;
  };

  // Enumerate initial segments: which member of each pair leads, and in what
  // order.  First admissible arrangement wins; enumeration order is fixed, so
  // the result is deterministic.
  std::vector<std::size_t> base(half);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << half); ++mask) {
    for (std::size_t i = 0; i < half; ++i)
      base[i] = (mask >> i) & 1u ? pairs[i].second : pairs[i].first;
    std::vector<std::size_t> lead = base;
    std::sort(lead.begin(), lead.end());
    do {
      std::vector<std::size_t> arrangement = lead;
      for (std::size_t i = 0; i < half; ++i)
        arrangement.push_back(neg_class[lead[half - 1 - i]]);
      if (admissible(arrangement)) return assemble(q, arrangement, *blocks);
    } while (std::next_permutation(lead.begin(), lead.end()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

bool member_of_class(const ChoiceModel& f, ChoiceClass c,
                     const std::vector<Sentence>& universe) {
  switch (c.tag) {
    case ClassTag::All: return true;
    case ClassTag::Associative:
      return !find_associativity_failure(f, universe).has_value();
    case ClassTag::Regular:
      return !find_regularity_failure(f, universe).has_value();
    case ClassTag::RegularAssociative:
      return !find_associativity_failure(f, universe).has_value() &&
             !find_regularity_failure(f, universe).has_value();
    case ClassTag::NegDecreasing: {
      if (find_associativity_failure(f, universe) ||
          find_regularity_failure(f, universe))
        return false;
      const auto order = order_from_choice(f, universe);
      if (!is_regular_order(order)) return false;
      if (find_neg_decrease_failure(order)) return false;
      if (c.rule == TopBotRule::None) return true;
      // Block positions of the tautology/contradiction classes, if present.
      const Quotient q = make_quotient(order);
      const auto top_class = q.find_class_equivalent(top());
      const auto bot_class = q.find_class_equivalent(bot());
      std::unordered_map<Sentence, std::size_t> pos;
      for (std::size_t i = 0; i < order.size(); ++i) pos.emplace(order[i], i);
      const auto first_pos = [&](std::size_t cls) {
        std::size_t best = order.size();
        for (std::size_t i : q.class_members[cls])
          best = std::min(best, pos.at(q.universe[i]));
        return best;
      };
      switch (c.rule) {
        case TopBotRule::TopBeforeBot:
          return !top_class || !bot_class || first_pos(*top_class) < first_pos(*bot_class);
        case TopBotRule::BotBeforeTop:
          return !top_class || !bot_class || first_pos(*bot_class) < first_pos(*top_class);
        case TopBotRule::TopLeast:
          return !top_class || first_pos(*top_class) == 0;
        case TopBotRule::BotLeast:
          return !bot_class || first_pos(*bot_class) == 0;
        case TopBotRule::None: return true;
      }
      return true;
    }
  }
  throw Error("unreachable");
}

}  // namespace pls
