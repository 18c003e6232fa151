#include "pls/sentence.hpp"

#include <algorithm>
#include <utility>

#include "pls/error.hpp"

namespace pls {

struct Sentence::Node {
  Kind kind;
  std::string name;            // Atom only
  std::vector<Sentence> kids;  // Neg: one, And/Sup: two
  std::string text;
  std::size_t hash = 0;
  int sups = 0;
};

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty() || name == "top" || name == "bot") return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

Kind Sentence::kind() const { return node_->kind; }

const std::string& Sentence::name() const {
  if (node_->kind != Kind::Atom) throw DomainError("name() on a non-atom");
  return node_->name;
}

const Sentence& Sentence::child() const {
  if (node_->kind != Kind::Neg) throw DomainError("child() on a non-negation");
  return node_->kids[0];
}

const Sentence& Sentence::left() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Sup)
    throw DomainError("left() on a non-binary sentence");
  return node_->kids[0];
}

const Sentence& Sentence::right() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Sup)
    throw DomainError("right() on a non-binary sentence");
  return node_->kids[1];
}

const std::string& Sentence::text() const { return node_->text; }
bool Sentence::is_classical() const { return node_->sups == 0; }
int Sentence::sup_count() const { return node_->sups; }
std::size_t Sentence::hash() const { return node_->hash; }

Sentence Sentence::wrap(Kind kind, std::string name, std::vector<Sentence> kids,
                        std::string text, int sups) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->kids = std::move(kids);
  node->text = std::move(text);
  node->hash = std::hash<std::string>{}(node->text);
  node->sups = sups;
  return Sentence(std::move(node));
}

Sentence atom(const std::string& name) {
  if (!valid_atom_name(name))
    throw DomainError("invalid atom name: '" + name + "'");
  return Sentence::wrap(Kind::Atom, name, {}, name, 0);
}

Sentence top() {
  static const Sentence instance = Sentence::wrap(Kind::Top, "", {}, "top", 0);
  return instance;
}

Sentence bot() {
  static const Sentence instance = Sentence::wrap(Kind::Bot, "", {}, "bot", 0);
  return instance;
}

Sentence neg(Sentence s) {
  std::string text = "(~" + s.text() + ")";
  int sups = s.sup_count();
  return Sentence::wrap(Kind::Neg, "", {std::move(s)}, std::move(text), sups);
}

Sentence conj(Sentence lhs, Sentence rhs) {
  std::string text = "(" + lhs.text() + " & " + rhs.text() + ")";
  int sups = lhs.sup_count() + rhs.sup_count();
  return Sentence::wrap(Kind::And, "", {std::move(lhs), std::move(rhs)},
                        std::move(text), sups);
}

Sentence sup(Sentence lhs, Sentence rhs) {
  std::string text = "(" + lhs.text() + " | " + rhs.text() + ")";
  int sups = lhs.sup_count() + rhs.sup_count() + 1;
  return Sentence::wrap(Kind::Sup, "", {std::move(lhs), std::move(rhs)},
                        std::move(text), sups);
}

Sentence disj(Sentence lhs, Sentence rhs) {
  return neg(conj(neg(std::move(lhs)), neg(std::move(rhs))));
}

Sentence implies(Sentence lhs, Sentence rhs) {
  return neg(conj(std::move(lhs), neg(std::move(rhs))));
}

Sentence iff(Sentence lhs, Sentence rhs) {
  return conj(implies(lhs, rhs), implies(rhs, lhs));
}

Sentence dual_sup(Sentence lhs, Sentence rhs) {
  return neg(sup(neg(std::move(lhs)), neg(std::move(rhs))));
}

namespace {

void collect_atoms(const Sentence& s, std::set<std::string>& out) {
  switch (s.kind()) {
    case Kind::Atom: out.insert(s.name()); break;
    case Kind::Top:
    case Kind::Bot: break;
    case Kind::Neg: collect_atoms(s.child(), out); break;
    case Kind::And:
    case Kind::Sup:
      collect_atoms(s.left(), out);
      collect_atoms(s.right(), out);
      break;
  }
}

void collect_subsentences(const Sentence& s, std::set<Sentence>& out) {
  out.insert(s);
  switch (s.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot: break;
    case Kind::Neg: collect_subsentences(s.child(), out); break;
    case Kind::And:
    case Kind::Sup:
      collect_subsentences(s.left(), out);
      collect_subsentences(s.right(), out);
      break;
  }
}

}  // namespace

std::set<std::string> atom_names(const Sentence& s) {
  std::set<std::string> out;
  collect_atoms(s, out);
  return out;
}

std::vector<Sentence> subsentences(const Sentence& s) {
  std::set<Sentence> out;
  collect_subsentences(s, out);
  return {out.begin(), out.end()};
}

Sentence substitute(const Sentence& phi, const Sentence& target,
                    const Sentence& replacement) {
  if (phi == target) return replacement;
  switch (phi.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot: return phi;
    case Kind::Neg: return neg(substitute(phi.child(), target, replacement));
    case Kind::And:
      return conj(substitute(phi.left(), target, replacement),
                  substitute(phi.right(), target, replacement));
    case Kind::Sup:
      return sup(substitute(phi.left(), target, replacement),
                 substitute(phi.right(), target, replacement));
  }
  throw Error("unreachable");
}

Sentence dual(const Sentence& s) {
  if (s.is_classical()) return s;
  switch (s.kind()) {
    case Kind::Neg: return neg(dual(s.child()));
    case Kind::And: return conj(dual(s.left()), dual(s.right()));
    case Kind::Sup: return dual_sup(dual(s.left()), dual(s.right()));
    default: throw Error("unreachable");
  }
}

Sentence strip_double_neg(const Sentence& s) {
  switch (s.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot: return s;
    case Kind::Neg:
      if (s.child().kind() == Kind::Neg)
        return strip_double_neg(s.child().child());
      return neg(strip_double_neg(s.child()));
    case Kind::And:
      return conj(strip_double_neg(s.left()), strip_double_neg(s.right()));
    case Kind::Sup:
      return sup(strip_double_neg(s.left()), strip_double_neg(s.right()));
  }
  throw Error("unreachable");
}

}  // namespace pls
