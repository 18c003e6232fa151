#include <doctest.h>

#include <vector>

#include "pls/error.hpp"
#include "pls/parser.hpp"
#include "pls/truth.hpp"

using namespace pls;

namespace {

Assignment assignment(std::initializer_list<std::pair<const char*, bool>> pairs) {
  Assignment m;
  for (const auto& [name, value] : pairs) m.set(name, value);
  return m;
}

}  // namespace

TEST_CASE("classical evaluation follows the truth tables") {
  CHECK_FALSE(eval_classical(assignment({{"p", true}}), parse("~p")));
  CHECK(eval_classical(assignment({}), parse("top")));
  CHECK_FALSE(eval_classical(assignment({}), parse("bot")));
  CHECK_FALSE(eval_classical(assignment({{"p", true}, {"q", false}}),
                             parse("~(p & ~q)")));
}

TEST_CASE("evaluation rejects missing atoms and superposition") {
  CHECK_THROWS_AS(eval_classical(assignment({}), parse("p")), DomainError);
  CHECK_THROWS_AS(eval_classical(assignment({{"p", true}, {"q", true}}),
                                 parse("p | q")),
                  DomainError);
}

TEST_CASE("classical tautology and equivalence") {
  CHECK(is_tautology_classical(parse("p \\/ ~p")));
  CHECK_FALSE(is_tautology_classical(parse("p \\/ q")));
  CHECK(is_tautology_classical(parse("top")));
  CHECK(are_equivalent(parse("p"), parse("~~p")));
  CHECK(are_equivalent(parse("top"), parse("p \\/ ~p")));
  CHECK_FALSE(are_equivalent(parse("p"), parse("q")));
  // The verdict ignores atoms the two sides do not share.
  CHECK(are_equivalent(parse("p & (q \\/ ~q)"), parse("p")));
}

TEST_CASE("satisfiability returns the first witness in counting order") {
  const auto witness =
      satisfiable_classical({parse("p"), parse("~q"), parse("~r")});
  REQUIRE(witness.has_value());
  CHECK(witness->values ==
        assignment({{"p", true}, {"q", false}, {"r", false}}).values);

  CHECK_FALSE(satisfiable_classical({parse("p"), parse("~p")}).has_value());
  // The empty set is satisfiable by the empty assignment.
  const auto empty = satisfiable_classical({});
  REQUIRE(empty.has_value());
  CHECK(empty->values.empty());
}

TEST_CASE("atom limit guards the truth-table search") {
  std::vector<Sentence> wide;
  Sentence s = atom("a0");
  for (int i = 1; i < 25; ++i) s = conj(s, atom("a" + std::to_string(i)));
  CHECK_THROWS_AS(is_tautology_classical(s), CapacityError);
  CHECK_NOTHROW(is_tautology_classical(s, 25));
}

TEST_CASE("quotient groups by classical equivalence") {
  const Quotient q =
      make_quotient({parse("p"), parse("~~p"), parse("q")});
  CHECK(q.class_count() == 2);
  CHECK(q.class_of[*q.find(parse("p"))] == q.class_of[*q.find(parse("~~p"))]);
  CHECK(q.class_of[*q.find(parse("p"))] != q.class_of[*q.find(parse("q"))]);

  CHECK(make_quotient({parse("p & q"), parse("q & p")}).class_count() == 1);
  CHECK(make_quotient({parse("top"), parse("p \\/ ~p")}).class_count() == 1);
}

TEST_CASE("quotient universe is sorted and deduplicated") {
  const Quotient q = make_quotient({parse("q"), parse("p"), parse("p")});
  REQUIRE(q.universe.size() == 2);
  CHECK(q.universe[0] == parse("p"));
  CHECK(q.universe[1] == parse("q"));
  CHECK(q.representative.size() == 2);
  CHECK_FALSE(q.find(parse("r")).has_value());
  CHECK(q.find_class_equivalent(parse("~~q")) == q.class_of[*q.find(parse("q"))]);
  CHECK_FALSE(q.find_class_equivalent(parse("r")).has_value());
}
