#include "pls/calculus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "pls/error.hpp"
#include "pls/parser.hpp"

namespace pls {

namespace {

const std::vector<std::pair<SchemeId, const char*>>& scheme_names() {
  static const std::vector<std::pair<SchemeId, const char*>> names = {
      {SchemeId::PL1, "PL1"}, {SchemeId::PL2, "PL2"}, {SchemeId::PL3, "PL3"},
      {SchemeId::PL4, "PL4"}, {SchemeId::PL5, "PL5"}, {SchemeId::PL6, "PL6"},
      {SchemeId::S1, "S1"},   {SchemeId::S2, "S2"},   {SchemeId::S3, "S3"},
      {SchemeId::S4, "S4"},   {SchemeId::S5, "S5"},   {SchemeId::S6, "S6"},
      {SchemeId::S6p, "S6p"}, {SchemeId::S7, "S7"},   {SchemeId::S7p, "S7p"},
  };
  return names;
}

// Metavariables are atoms with these reserved names inside scheme templates.
// "alpha" additionally requires its match to be classical.
bool is_metavariable(const std::string& name) {
  return name == "phi" || name == "psi" || name == "sigma" || name == "alpha";
}

const Sentence& scheme_template(SchemeId id) {
  static const Sentence phi = atom("phi");
  static const Sentence psi = atom("psi");
  static const Sentence sigma = atom("sigma");
  static const Sentence alpha = atom("alpha");
  static const std::map<SchemeId, Sentence> templates = {
      {SchemeId::PL1, implies(phi, implies(psi, phi))},
      {SchemeId::PL2, implies(implies(phi, implies(psi, sigma)),
                              implies(implies(phi, psi), implies(phi, sigma)))},
      {SchemeId::PL3, implies(implies(neg(phi), neg(psi)),
                              implies(implies(neg(phi), psi), phi))},
      {SchemeId::PL4, implies(conj(phi, psi), phi)},
      {SchemeId::PL5, implies(conj(phi, psi), psi)},
      {SchemeId::PL6, implies(phi, implies(psi, conj(phi, psi)))},
      {SchemeId::S1, implies(conj(phi, psi), sup(phi, psi))},
      {SchemeId::S2, implies(sup(phi, psi), disj(phi, psi))},
      {SchemeId::S3, implies(sup(phi, psi), sup(psi, phi))},
      {SchemeId::S4, implies(sup(sup(phi, psi), sigma), sup(phi, sup(psi, sigma)))},
      {SchemeId::S5, implies(conj(phi, neg(psi)),
                             iff(sup(phi, psi), sup(neg(phi), neg(psi))))},
      {SchemeId::S6, sup(bot(), top())},
      {SchemeId::S6p, sup(alpha, top())},
      {SchemeId::S7, neg(sup(bot(), top()))},
      {SchemeId::S7p, neg(sup(alpha, bot()))},
  };
  return templates.at(id);
}

// Structural first-order matching of s against a template whose metavariable
// atoms may bind arbitrary subtrees (consistently across occurrences).
bool match_template(const Sentence& s, const Sentence& tmpl, Bindings& bindings) {
  if (tmpl.kind() == Kind::Atom && is_metavariable(tmpl.name())) {
    if (tmpl.name() == "alpha" && !s.is_classical()) return false;
    auto [it, inserted] = bindings.emplace(tmpl.name(), s);
    return inserted || it->second == s;
  }
  if (s.kind() != tmpl.kind()) return false;
  switch (tmpl.kind()) {
    case Kind::Atom: return s.name() == tmpl.name();
    case Kind::Top:
    case Kind::Bot: return true;
    case Kind::Neg: return match_template(s.child(), tmpl.child(), bindings);
    case Kind::And:
    case Kind::Sup:
      return match_template(s.left(), tmpl.left(), bindings) &&
             match_template(s.right(), tmpl.right(), bindings);
  }
  return false;
}

}  // namespace

std::optional<SchemeId> scheme_from_name(const std::string& name) {
  for (const auto& [id, text] : scheme_names())
    if (name == text) return id;
  return std::nullopt;
}

std::string scheme_name(SchemeId id) {
  for (const auto& [candidate, text] : scheme_names())
    if (candidate == id) return text;
  throw Error("unknown scheme id");
}

const std::vector<SchemeId>& all_schemes() {
  static const std::vector<SchemeId> ids = [] {
    std::vector<SchemeId> out;
    for (const auto& [id, text] : scheme_names()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::optional<Bindings> match_scheme(const Sentence& s, SchemeId id) {
  Bindings bindings;
  if (!match_template(s, scheme_template(id), bindings)) return std::nullopt;
  return bindings;
}

std::optional<SystemId> system_from_name(const std::string& name) {
  if (name == "K0") return SystemId::K0;
  if (name == "K1") return SystemId::K1;
  if (name == "K2") return SystemId::K2;
  if (name == "K3") return SystemId::K3;
  return std::nullopt;
}

std::string system_name(SystemId id) {
  switch (id) {
    case SystemId::K0: return "K0";
    case SystemId::K1: return "K1";
    case SystemId::K2: return "K2";
    case SystemId::K3: return "K3";
  }
  throw Error("unknown system id");
}

const std::vector<SchemeId>& axiom_schemes(SystemId system) {
  static const std::vector<SchemeId> base = {
      SchemeId::PL1, SchemeId::PL2, SchemeId::PL3,
      SchemeId::PL4, SchemeId::PL5, SchemeId::PL6,
      SchemeId::S1,  SchemeId::S2,  SchemeId::S3,
  };
  static const std::vector<SchemeId> k2 = [] {
    auto out = base;
    out.push_back(SchemeId::S4);
    return out;
  }();
  static const std::vector<SchemeId> k3 = [] {
    auto out = k2;
    out.push_back(SchemeId::S5);
    return out;
  }();
  switch (system) {
    case SystemId::K0:
    case SystemId::K1: return base;
    case SystemId::K2: return k2;
    case SystemId::K3: return k3;
  }
  throw Error("unknown system id");
}

bool scheme_in_system(SchemeId id, SystemId system) {
  const auto& schemes = axiom_schemes(system);
  return std::find(schemes.begin(), schemes.end(), id) != schemes.end();
}

ChoiceClass sound_class(SystemId system) {
  switch (system) {
    case SystemId::K0: return {ClassTag::All, TopBotRule::None};
    case SystemId::K1: return {ClassTag::Regular, TopBotRule::None};
    case SystemId::K2: return {ClassTag::RegularAssociative, TopBotRule::None};
    case SystemId::K3: return {ClassTag::NegDecreasing, TopBotRule::None};
  }
  throw Error("unknown system id");
}

namespace {

// One physical proof-file line with comments stripped, plus its position.
struct RawLine {
  std::string text;
  std::size_t number;  // 1-based physical line
};

std::vector<RawLine> split_lines(const std::string& text) {
  std::vector<RawLine> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    out.push_back({line.substr(begin, end - begin + 1), number});
  }
  return out;
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

[[noreturn]] void malformed(const std::string& what, std::size_t line_number) {
  throw ParseError("proof file: " + what + " on line " + std::to_string(line_number),
                   0);
}

std::optional<std::size_t> parse_index(const std::string& word) {
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  return std::stoul(word);
}

}  // namespace

ProofScript parse_proof(const std::string& text) {
  const auto raw = split_lines(text);
  if (raw.empty()) throw ParseError("proof file: empty", 0);

  ProofScript script;
  std::size_t at = 0;

  {
    const auto words = split_words(raw[at].text);
    if (words.size() != 2 || words[0] != "system")
      malformed("expected 'system K0|K1|K2|K3'", raw[at].number);
    const auto system = system_from_name(words[1]);
    if (!system) malformed("unknown system '" + words[1] + "'", raw[at].number);
    script.system = *system;
    ++at;
  }

  while (at < raw.size() && raw[at].text.rfind("premise ", 0) == 0) {
    script.premises.push_back(parse(raw[at].text.substr(8)));
    ++at;
  }

  std::map<std::size_t, std::size_t> line_by_index;  // user number -> position
  for (; at < raw.size(); ++at) {
    const std::string& text_line = raw[at].text;
    const auto semi = text_line.find(';');
    if (semi == std::string::npos)
      malformed("expected '<n> <sentence> ; <justification>'", raw[at].number);

    std::istringstream head(text_line.substr(0, semi));
    std::size_t index = 0;
    if (!(head >> index)) malformed("expected a line number", raw[at].number);
    if (!script.lines.empty() && index <= script.lines.back().index)
      malformed("line numbers must increase", raw[at].number);
    std::string sentence_text;
    std::getline(head, sentence_text);
    Sentence sentence = parse(sentence_text);

    const auto words = split_words(text_line.substr(semi + 1));
    Justification just;
    if (words.size() == 1 && words[0] == "premise") {
      just.kind = Justification::Kind::Premise;
    } else if (words.size() == 2 && words[0] == "ax") {
      const auto scheme = scheme_from_name(words[1]);
      if (!scheme) malformed("unknown scheme '" + words[1] + "'", raw[at].number);
      just.kind = Justification::Kind::Axiom;
      just.scheme = *scheme;
    } else if (words.size() == 3 && words[0] == "mp") {
      just.kind = Justification::Kind::MP;
      const auto i = parse_index(words[1]);
      const auto j = parse_index(words[2]);
      if (!i || !j) malformed("mp needs two line numbers", raw[at].number);
      just.i = *i;
      just.j = *j;
      for (std::size_t cited : {just.i, just.j})
        if (!line_by_index.count(cited))
          malformed("citation of line " + std::to_string(cited) +
                        " which is not an earlier line",
                    raw[at].number);
    } else if (words.size() == 2 && words[0] == "sv") {
      just.kind = Justification::Kind::SV;
      const auto i = parse_index(words[1]);
      if (!i) malformed("sv needs a line number", raw[at].number);
      just.i = *i;
      if (!line_by_index.count(just.i))
        malformed("citation of line " + std::to_string(just.i) +
                      " which is not an earlier line",
                  raw[at].number);
    } else {
      malformed("unknown justification '" + text_line.substr(semi + 1) + "'",
                raw[at].number);
    }

    line_by_index[index] = script.lines.size();
    script.lines.push_back({index, std::move(sentence), just});
  }
  return script;
}

ProofScript read_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open proof file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_proof(buffer.str());
}

ProofCheck check_proof(const ProofScript& script, const DecisionOptions& opts) {
  static const Sentence phi = atom("phi");
  static const Sentence psi = atom("psi");
  static const Sentence sigma = atom("sigma");
  static const Sentence iff_template = iff(phi, psi);

  std::map<std::size_t, const ProofLine*> by_index;
  for (const ProofLine& line : script.lines) {
    const Justification& just = line.justification;
    switch (just.kind) {
      case Justification::Kind::Premise: {
        const bool listed = std::find(script.premises.begin(), script.premises.end(),
                                      line.sentence) != script.premises.end();
        if (!listed) return {false, line.index, "bad-premise"};
        break;
      }
      case Justification::Kind::Axiom: {
        if (!scheme_in_system(just.scheme, script.system) ||
            !match_scheme(line.sentence, just.scheme))
          return {false, line.index, "bad-scheme"};
        break;
      }
      case Justification::Kind::MP: {
        const ProofLine* antecedent = by_index.at(just.i);
        const ProofLine* implication = by_index.at(just.j);
        if (implication->sentence != implies(antecedent->sentence, line.sentence))
          return {false, line.index, "bad-mp"};
        break;
      }
      case Justification::Kind::SV: {
        if (script.system == SystemId::K0)
          return {false, line.index, "sv-not-available-in-K0"};
        const ProofLine* cited = by_index.at(just.i);
        Bindings bindings;
        if (!match_template(cited->sentence, iff_template, bindings))
          return {false, line.index, "sv-shape"};
        // Current line must be (phi|sigma) <-> (psi|sigma) for the cited
        // phi/psi (already bound) and some sigma.
        static const Sentence sv_template = iff(sup(phi, sigma), sup(psi, sigma));
        if (!match_template(line.sentence, sv_template, bindings))
          return {false, line.index, "sv-shape"};
        if (!theoremhood_k0(cited->sentence, opts))
          return {false, line.index, "sv-side-condition-failed"};
        break;
      }
    }
    by_index[line.index] = &line;
  }
  return {true, 0, ""};
}

bool theoremhood_k0(const Sentence& s, const DecisionOptions& opts) {
  return is_tautology(s, {ClassTag::All, TopBotRule::None}, opts).value;
}

bool consistent_k0(const std::vector<Sentence>& sigma, const DecisionOptions& opts) {
  return is_satisfiable(sigma, {ClassTag::All, TopBotRule::None}, opts).value;
}

}  // namespace pls
