#include <doctest.h>

#include <string>
#include <tuple>
#include <vector>

#include "pls/collapse.hpp"
#include "pls/error.hpp"
#include "pls/parser.hpp"

using namespace pls;

namespace {

ChoiceModel table_of(
    std::initializer_list<std::tuple<const char*, const char*, const char*>> rows) {
  std::vector<std::pair<PairKey, Sentence>> entries;
  for (const auto& [a, b, chosen] : rows)
    entries.emplace_back(PairKey(parse(a), parse(b)), parse(chosen));
  return ChoiceModel::table(entries);
}

Commitments commitments_of(
    std::initializer_list<std::tuple<const char*, const char*, const char*>> rows) {
  Commitments out;
  for (const auto& [a, b, chosen] : rows)
    out.emplace(PairKey(parse(a), parse(b)), parse(chosen));
  return out;
}

}  // namespace

TEST_CASE("collapsing fixes classical sentences") {
  const ChoiceModel empty = ChoiceModel::table({});
  CHECK(collapse(empty, parse("~(p & q)")) == parse("~(p & q)"));
  CHECK(collapse(empty, parse("top")) == parse("top"));
}

TEST_CASE("collapsing resolves superpositions through the model") {
  CHECK(collapse(table_of({{"p", "q", "p"}}), parse("p | q")) == parse("p"));
  CHECK(collapse(table_of({{"p", "q", "q"}}), parse("~(p | q) & r")) ==
        parse("~q & r"));
  // Equal sides never consult the table.
  CHECK(collapse(ChoiceModel::table({}), parse("p | p")) == parse("p"));
  // Uncovered genuine pairs are domain errors.
  CHECK_THROWS_AS(collapse(ChoiceModel::table({}), parse("p | q")), DomainError);
}

TEST_CASE("collapsing commutes with the defined connectives") {
  const ChoiceModel f = table_of({{"p", "q", "p"}});
  CHECK(collapse(f, parse("(p | q) \\/ r")) == parse("p \\/ r"));
  CHECK(collapse(f, parse("(p | q) -> r")) == parse("p -> r"));
  CHECK(collapse(f, parse("(p | q) <-> r")) == parse("p <-> r"));
}

TEST_CASE("a single superposition enumerates both branches") {
  const auto patterns = enumerate_collapses(parse("p | q"));
  REQUIRE(patterns.size() == 2);
  CHECK(patterns[0] == CollapsePattern{parse("p"), commitments_of({{"p", "q", "p"}})});
  CHECK(patterns[1] == CollapsePattern{parse("q"), commitments_of({{"p", "q", "q"}})});
}

TEST_CASE("trivial superpositions are forced") {
  const auto patterns = enumerate_collapses(parse("p | p"));
  REQUIRE(patterns.size() == 1);
  CHECK(patterns[0] == CollapsePattern{parse("p"), {}});
}

TEST_CASE("shared commitments rule out mixed patterns") {
  const auto patterns = enumerate_collapses(parse("(p | q) & ~(p | q)"));
  REQUIRE(patterns.size() == 2);
  CHECK(patterns[0] ==
        CollapsePattern{parse("p & ~p"), commitments_of({{"p", "q", "p"}})});
  CHECK(patterns[1] ==
        CollapsePattern{parse("q & ~q"), commitments_of({{"p", "q", "q"}})});
}

TEST_CASE("an upstream commitment decides later superpositions") {
  // In (p|q)|q, once {p,q} has been resolved the outer node has no freedom.
  const auto patterns = enumerate_collapses(parse("(p | q) | q"));
  REQUIRE(patterns.size() == 2);
  CHECK(patterns[0] == CollapsePattern{parse("p"), commitments_of({{"p", "q", "p"}})});
  CHECK(patterns[1] == CollapsePattern{parse("q"), commitments_of({{"p", "q", "q"}})});
}

TEST_CASE("pattern counts stay within the superposition bound") {
  for (const char* text : {"p", "p | q", "(p | q) | r", "(p | q) & (q | r)",
                           "~((p | q) <-> (r | p))"}) {
    const Sentence s = parse(text);
    CHECK(enumerate_collapses(s).size() <= (std::size_t{1} << s.sup_count()));
  }
}

TEST_CASE("every pattern matches direct evaluation under an agreeing model") {
  const Sentence s = parse("(p | q) & ((q | r) | p)");
  const auto patterns = enumerate_collapses(s);
  for (const auto& pattern : patterns) {
    // Complete the commitments to a table over the relevant universe.
    std::vector<std::pair<PairKey, Sentence>> entries(pattern.commitments.begin(),
                                                      pattern.commitments.end());
    const auto universe = relevant_universe(patterns, false);
    for (std::size_t i = 0; i < universe.size(); ++i)
      for (std::size_t j = i + 1; j < universe.size(); ++j) {
        const PairKey key(universe[i], universe[j]);
        if (!pattern.commitments.count(key)) entries.emplace_back(key, key.first);
      }
    const ChoiceModel f = ChoiceModel::table(entries);
    CHECK(collapse(f, s) == pattern.result);
  }
}

TEST_CASE("enumeration honours the pattern cap") {
  CHECK_THROWS_AS(enumerate_collapses(parse("(p | q) & (r | s2)"), 3), CapacityError);
  CHECK(enumerate_collapses(parse("(p | q) & (r | s2)"), 8).size() == 4);

  // Seventeen independent superpositions overflow the default cap.
  Sentence wide = parse("a0");
  for (char c = 'a'; c < 'a' + 17; ++c)
    wide = sup(wide, parse(std::string(1, c) + "1"));
  CHECK_THROWS_AS(enumerate_collapses(wide), CapacityError);
}

TEST_CASE("the relevant universe collects results and commitments") {
  const auto of = [](const char* text, bool closed) {
    return relevant_universe(enumerate_collapses(parse(text)), closed);
  };
  CHECK(of("p | q", false) == std::vector<Sentence>{parse("p"), parse("q")});
  CHECK(of("p | q", true) == std::vector<Sentence>{parse("~p"), parse("~q"),
                                                   parse("p"), parse("q")});
  CHECK(of("p | ~p", false) == std::vector<Sentence>{parse("~p"), parse("p")});
  CHECK(of("p | ~p", true) == std::vector<Sentence>{parse("~~p"), parse("~p"),
                                                    parse("p")});
  CHECK(of("(p | q) | r", false) ==
        std::vector<Sentence>{parse("p"), parse("q"), parse("r")});
}
