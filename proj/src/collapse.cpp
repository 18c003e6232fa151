#include "pls/collapse.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "pls/error.hpp"

namespace pls {

Sentence collapse(const ChoiceModel& f, const Sentence& s) {
  if (s.is_classical()) return s;
  switch (s.kind()) {
    case Kind::Neg: return neg(collapse(f, s.child()));
    case Kind::And: return conj(collapse(f, s.left()), collapse(f, s.right()));
    case Kind::Sup: return f.choose(collapse(f, s.left()), collapse(f, s.right()));
    default: throw Error("unreachable");
  }
}

namespace {

// Union of two commitment sets; nullopt when they disagree on some pair.
std::optional<Commitments> merge(const Commitments& a, const Commitments& b) {
  Commitments out = a;
  for (const auto& [key, chosen] : b) {
    auto [it, inserted] = out.emplace(key, chosen);
    if (!inserted && it->second != chosen) return std::nullopt;
  }
  return out;
}

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw CapacityError("collapse patterns exceed the cap of " + std::to_string(cap));
}

void sort_and_dedupe(std::vector<CollapsePattern>& patterns) {
  const auto key = [](const CollapsePattern& p) {
    std::string s = p.result.text();
    for (const auto& [pair, chosen] : p.commitments)
      s += "\n{" + pair.first.text() + "," + pair.second.text() + "}=>" + chosen.text();
    return s;
  };
  std::sort(patterns.begin(), patterns.end(),
            [&](const CollapsePattern& a, const CollapsePattern& b) {
              return key(a) < key(b);
            });
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

std::vector<CollapsePattern> enumerate(const Sentence& s, std::size_t cap) {
  if (s.is_classical()) return {CollapsePattern{s, {}}};

  switch (s.kind()) {
    case Kind::Neg: {
      auto patterns = enumerate(s.child(), cap);
      for (auto& p : patterns) p.result = neg(p.result);
      return patterns;
    }
    case Kind::And: {
      const auto lhs = enumerate(s.left(), cap);
      const auto rhs = enumerate(s.right(), cap);
      check_cap(lhs.size() * rhs.size(), cap);
      std::vector<CollapsePattern> out;
      for (const auto& pl : lhs)
        for (const auto& pr : rhs)
          if (auto merged = merge(pl.commitments, pr.commitments))
            out.push_back({conj(pl.result, pr.result), std::move(*merged)});
      sort_and_dedupe(out);
      return out;
    }
    case Kind::Sup: {
      const auto lhs = enumerate(s.left(), cap);
      const auto rhs = enumerate(s.right(), cap);
      check_cap(lhs.size() * rhs.size() * 2, cap);
      std::vector<CollapsePattern> out;
      for (const auto& pl : lhs)
        for (const auto& pr : rhs) {
          auto merged = merge(pl.commitments, pr.commitments);
          if (!merged) continue;
          if (pl.result == pr.result) {
            // No genuine choice at this node.
            out.push_back({pl.result, std::move(*merged)});
            continue;
          }
          const PairKey key(pl.result, pr.result);
          if (auto it = merged->find(key); it != merged->end()) {
            // This pair is already committed upstream; follow it.
            out.push_back({it->second, std::move(*merged)});
            continue;
          }
          for (const Sentence& pick : {pl.result, pr.result}) {
            Commitments with = *merged;
            with.emplace(key, pick);
            out.push_back({pick, std::move(with)});
          }
        }
      sort_and_dedupe(out);
      check_cap(out.size(), cap);
      return out;
    }
    default: throw Error("unreachable");
  }
}

}  // namespace

std::vector<CollapsePattern> enumerate_collapses(const Sentence& s,
                                                 std::size_t max_patterns) {
  return enumerate(s, max_patterns);
}

std::vector<Sentence> relevant_universe(const std::vector<CollapsePattern>& patterns,
                                        bool close_under_negation) {
  std::set<Sentence> base;
  for (const auto& p : patterns) {
    base.insert(p.result);
    for (const auto& [pair, chosen] : p.commitments) {
      base.insert(pair.first);
      base.insert(pair.second);
    }
  }
  if (close_under_negation) {
    std::set<Sentence> closed = base;
    for (const Sentence& s : base) closed.insert(neg(s));
    return {closed.begin(), closed.end()};
  }
  return {base.begin(), base.end()};
}

}  // namespace pls
