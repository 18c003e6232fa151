#include "pls/truth.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "pls/error.hpp"

namespace pls {

bool Assignment::get(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end())
    throw DomainError("assignment does not cover atom '" + name + "'");
  return it->second;
}

bool eval_classical(const Assignment& m, const Sentence& s) {
  switch (s.kind()) {
    case Kind::Atom: return m.get(s.name());
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Neg: return !eval_classical(m, s.child());
    case Kind::And: return eval_classical(m, s.left()) && eval_classical(m, s.right());
    case Kind::Sup:
      throw DomainError("classical evaluation reached a superposition: " + s.text());
  }
  throw Error("unreachable");
}

namespace {

std::vector<std::string> sorted_atoms(const std::set<std::string>& names,
                                      std::size_t atom_limit) {
  if (names.size() > atom_limit)
    throw CapacityError("truth table over " + std::to_string(names.size()) +
                        " atoms exceeds the limit of " + std::to_string(atom_limit));
  return {names.begin(), names.end()};
}

Assignment assignment_for(const std::vector<std::string>& atoms, std::uint64_t mask) {
  Assignment m;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    m.set(atoms[i], (mask >> i) & 1u);
  return m;
}

}  // namespace

bool is_tautology_classical(const Sentence& s, std::size_t atom_limit) {
  const auto atoms = sorted_atoms(atom_names(s), atom_limit);
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (!eval_classical(assignment_for(atoms, mask), s)) return false;
  return true;
}

bool are_equivalent(const Sentence& a, const Sentence& b, std::size_t atom_limit) {
  if (a == b) return true;
  std::set<std::string> names = atom_names(a);
  names.merge(atom_names(b));
  const auto atoms = sorted_atoms(names, atom_limit);
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Assignment m = assignment_for(atoms, mask);
    if (eval_classical(m, a) != eval_classical(m, b)) return false;
  }
  return true;
}

std::optional<Assignment> satisfiable_classical(const std::vector<Sentence>& sentences,
                                                std::size_t atom_limit) {
  std::set<std::string> names;
  for (const Sentence& s : sentences) names.merge(atom_names(s));
  const auto atoms = sorted_atoms(names, atom_limit);
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Assignment m = assignment_for(atoms, mask);
    bool all = true;
    for (const Sentence& s : sentences)
      if (!eval_classical(m, s)) {
        all = false;
        break;
      }
    if (all) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> Quotient::find(const Sentence& s) const {
  auto it = std::lower_bound(universe.begin(), universe.end(), s);
  if (it != universe.end() && *it == s)
    return static_cast<std::size_t>(it - universe.begin());
  return std::nullopt;
}

std::optional<std::size_t> Quotient::find_class_equivalent(const Sentence& s) const {
  for (std::size_t c = 0; c < representative.size(); ++c)
    if (are_equivalent(representative[c], s)) return c;
  return std::nullopt;
}

Quotient make_quotient(std::vector<Sentence> universe, std::size_t atom_limit) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  Quotient q;
  q.universe = std::move(universe);
  q.class_of.resize(q.universe.size());
  for (std::size_t i = 0; i < q.universe.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < q.representative.size(); ++c)
      if (are_equivalent(q.representative[c], q.universe[i], atom_limit)) {
        found = c;
        break;
      }
    if (!found) {
      found = q.representative.size();
      q.representative.push_back(q.universe[i]);
      q.class_members.emplace_back();
    }
    q.class_of[i] = *found;
    q.class_members[*found].push_back(i);
  }
  return q;
}

}  // namespace pls
