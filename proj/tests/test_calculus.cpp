#include <doctest.h>

#include <string>
#include <vector>

#include "pls/calculus.hpp"
#include "pls/error.hpp"
#include "pls/parser.hpp"

using namespace pls;

TEST_CASE("scheme names round-trip") {
  const std::vector<const char*> names = {"PL1", "PL2", "PL3", "PL4", "PL5",
                                          "PL6", "S1",  "S2",  "S3",  "S4",
                                          "S5",  "S6",  "S6p", "S7",  "S7p"};
  CHECK(all_schemes().size() == names.size());
  for (const char* name : names) {
    const auto id = scheme_from_name(name);
    REQUIRE(id.has_value());
    CHECK(scheme_name(*id) == name);
  }
  CHECK_FALSE(scheme_from_name("S8").has_value());
  CHECK_FALSE(scheme_from_name("pl1").has_value());
}

TEST_CASE("system names round-trip and classes line up") {
  for (const char* name : {"K0", "K1", "K2", "K3"}) {
    const auto id = system_from_name(name);
    REQUIRE(id.has_value());
    CHECK(system_name(*id) == name);
  }
  CHECK_FALSE(system_from_name("K4").has_value());

  CHECK(sound_class(SystemId::K0) == ChoiceClass{ClassTag::All, TopBotRule::None});
  CHECK(sound_class(SystemId::K1) == ChoiceClass{ClassTag::Regular, TopBotRule::None});
  CHECK(sound_class(SystemId::K2) ==
        ChoiceClass{ClassTag::RegularAssociative, TopBotRule::None});
  CHECK(sound_class(SystemId::K3) ==
        ChoiceClass{ClassTag::NegDecreasing, TopBotRule::None});
}

TEST_CASE("axiom sets are nested as the systems grow") {
  CHECK(axiom_schemes(SystemId::K0) == axiom_schemes(SystemId::K1));
  CHECK(axiom_schemes(SystemId::K2).size() == axiom_schemes(SystemId::K1).size() + 1);
  CHECK(axiom_schemes(SystemId::K3).size() == axiom_schemes(SystemId::K2).size() + 1);

  CHECK(scheme_in_system(SchemeId::PL4, SystemId::K0));
  CHECK(scheme_in_system(SchemeId::S1, SystemId::K0));
  CHECK_FALSE(scheme_in_system(SchemeId::S4, SystemId::K1));
  CHECK(scheme_in_system(SchemeId::S4, SystemId::K2));
  CHECK_FALSE(scheme_in_system(SchemeId::S5, SystemId::K2));
  CHECK(scheme_in_system(SchemeId::S5, SystemId::K3));
  // The positional schemes are recognized but axiomatic in no system.
  for (SystemId system : {SystemId::K0, SystemId::K1, SystemId::K2, SystemId::K3}) {
    CHECK_FALSE(scheme_in_system(SchemeId::S6, system));
    CHECK_FALSE(scheme_in_system(SchemeId::S6p, system));
    CHECK_FALSE(scheme_in_system(SchemeId::S7, system));
    CHECK_FALSE(scheme_in_system(SchemeId::S7p, system));
  }
}

TEST_CASE("scheme matching binds metavariables structurally") {
  const auto s1 = match_scheme(parse("(p & q) -> (p | q)"), SchemeId::S1);
  REQUIRE(s1.has_value());
  CHECK(s1->at("phi") == parse("p"));
  CHECK(s1->at("psi") == parse("q"));

  CHECK(match_scheme(parse("(p | q) -> (q | p)"), SchemeId::S3).has_value());

  for (SchemeId id : all_schemes())
    CHECK_FALSE(match_scheme(parse("(p | q) -> (p & q)"), id).has_value());

  // Metavariables must bind consistently across occurrences.
  CHECK_FALSE(match_scheme(parse("(p & q) -> (p | r)"), SchemeId::S1).has_value());
  CHECK_FALSE(match_scheme(parse("(p & q) -> (q | p)"), SchemeId::S1).has_value());
}

TEST_CASE("propositional schemes accept superposed instances") {
  const auto pl1 = match_scheme(parse("(p | q) -> (r -> (p | q))"), SchemeId::PL1);
  REQUIRE(pl1.has_value());
  CHECK(pl1->at("phi") == parse("p | q"));
  CHECK(pl1->at("psi") == parse("r"));

  CHECK(match_scheme(parse("(~p -> ~q) -> ((~p -> q) -> p)"), SchemeId::PL3)
            .has_value());
  CHECK(match_scheme(parse("((p | p) & q) -> (p | p)"), SchemeId::PL4).has_value());
  CHECK(match_scheme(parse("p -> (q -> (p & q))"), SchemeId::PL6).has_value());
}

TEST_CASE("matching happens on the desugared trees") {
  CHECK(match_scheme(parse("(p | q) -> (p \\/ q)"), SchemeId::S2).has_value());
  CHECK(match_scheme(parse("(p | q) -> ~(~p & ~q)"), SchemeId::S2).has_value());
  CHECK(match_scheme(
            parse("(p & ~q) -> ((p | q) <-> (~p | ~q))"), SchemeId::S5)
            .has_value());
  CHECK(match_scheme(parse("((p | q) | r) -> (p | (q | r))"), SchemeId::S4)
            .has_value());
}

TEST_CASE("the positional schemes restrict their metavariable") {
  CHECK(match_scheme(parse("bot | top"), SchemeId::S6).has_value());
  CHECK_FALSE(match_scheme(parse("top | bot"), SchemeId::S6).has_value());
  CHECK(match_scheme(parse("p | top"), SchemeId::S6p).has_value());
  CHECK(match_scheme(parse("(p & q) | top"), SchemeId::S6p).has_value());
  CHECK_FALSE(match_scheme(parse("(q | q) | top"), SchemeId::S6p).has_value());
  CHECK(match_scheme(parse("~(bot | top)"), SchemeId::S7).has_value());
  CHECK(match_scheme(parse("~(p | bot)"), SchemeId::S7p).has_value());
  CHECK_FALSE(match_scheme(parse("~((p | p) | bot)"), SchemeId::S7p).has_value());
}

TEST_CASE("proof scripts parse into their parts") {
  const ProofScript script = parse_proof(R"(# a tiny script
system K1

premise p          # first premise
premise p -> q

1 p ; premise
2 p -> q ; premise
3 q ; mp 1 2
4 (p & q) -> (p | q) ; ax S1
)");
  CHECK(script.system == SystemId::K1);
  REQUIRE(script.premises.size() == 2);
  CHECK(script.premises[0] == parse("p"));
  CHECK(script.premises[1] == parse("p -> q"));
  REQUIRE(script.lines.size() == 4);
  CHECK(script.lines[2].index == 3);
  CHECK(script.lines[2].justification.kind == Justification::Kind::MP);
  CHECK(script.lines[2].justification.i == 1);
  CHECK(script.lines[2].justification.j == 2);
  CHECK(script.lines[3].justification.kind == Justification::Kind::Axiom);
  CHECK(script.lines[3].justification.scheme == SchemeId::S1);
}

TEST_CASE("malformed proof scripts are parse errors") {
  CHECK_THROWS_AS(parse_proof(""), ParseError);
  CHECK_THROWS_AS(parse_proof("1 p ; premise\n"), ParseError);  // no system line
  CHECK_THROWS_AS(parse_proof("system K9\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system K0\n1 p premise\n"), ParseError);  // no ';'
  CHECK_THROWS_AS(parse_proof("system K0\n2 p ; premise\n1 q ; premise\n"),
                  ParseError);  // numbers must increase
  CHECK_THROWS_AS(parse_proof("system K0\n1 p ; ax PL9\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system K0\n1 p ; mp 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system K1\n1 p <-> p ; sv 2\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system K0\n1 p ; mp 1x 2\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system K0\n1 p ; because\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system K0\n1 p & ; premise\n"), ParseError);
  CHECK_THROWS_AS(read_proof_file("/nonexistent/proof.txt"), Error);
}

TEST_CASE("modus ponens chains check out") {
  const ProofScript script = parse_proof(R"(system K0
premise p
premise p -> q
premise q -> r
1 p ; premise
2 p -> q ; premise
3 q ; mp 1 2
4 q -> r ; premise
5 r ; mp 3 4
)");
  const ProofCheck result = check_proof(script);
  CHECK(result.accepted);

  const ProofCheck wrong = check_proof(parse_proof(R"(system K0
premise p
premise q
1 p ; premise
2 q ; premise
3 r ; mp 1 2
)"));
  CHECK_FALSE(wrong.accepted);
  CHECK(wrong.line == 3);
  CHECK(wrong.reason == "bad-mp");
}

TEST_CASE("axiom lines must instantiate an available scheme") {
  CHECK(check_proof(parse_proof("system K0\n1 (p & q) -> (p | q) ; ax S1\n"))
            .accepted);
  CHECK(check_proof(parse_proof(
                        "system K2\n1 ((p | q) | r) -> (p | (q | r)) ; ax S4\n"))
            .accepted);
  CHECK(check_proof(parse_proof(
                        "system K3\n1 (p & ~q) -> ((p | q) <-> (~p | ~q)) ; ax S5\n"))
            .accepted);

  const ProofCheck not_instance =
      check_proof(parse_proof("system K0\n1 q ; ax S1\n"));
  CHECK_FALSE(not_instance.accepted);
  CHECK(not_instance.line == 1);
  CHECK(not_instance.reason == "bad-scheme");

  const ProofCheck not_in_system = check_proof(
      parse_proof("system K1\n1 ((p | q) | r) -> (p | (q | r)) ; ax S4\n"));
  CHECK_FALSE(not_in_system.accepted);
  CHECK(not_in_system.reason == "bad-scheme");

  const ProofCheck positional =
      check_proof(parse_proof("system K3\n1 bot | top ; ax S6\n"));
  CHECK_FALSE(positional.accepted);
  CHECK(positional.reason == "bad-scheme");
}

TEST_CASE("premise lines must be declared") {
  const ProofCheck result =
      check_proof(parse_proof("system K0\npremise p\n1 q ; premise\n"));
  CHECK_FALSE(result.accepted);
  CHECK(result.line == 1);
  CHECK(result.reason == "bad-premise");
}

TEST_CASE("substitution of equivalents is checked in full") {
  const char* accepted = R"(system K1
premise p <-> ~~p
1 p <-> ~~p ; premise
2 (p | q) <-> (~~p | q) ; sv 1
)";
  CHECK(check_proof(parse_proof(accepted)).accepted);

  // The rule is not part of K0.
  const ProofCheck in_k0 = check_proof(parse_proof(R"(system K0
premise p <-> ~~p
1 p <-> ~~p ; premise
2 (p | q) <-> (~~p | q) ; sv 1
)"));
  CHECK_FALSE(in_k0.accepted);
  CHECK(in_k0.line == 2);
  CHECK(in_k0.reason == "sv-not-available-in-K0");

  // The cited line must be a biconditional.
  const ProofCheck cited_shape = check_proof(parse_proof(R"(system K1
premise p
1 p ; premise
2 (p | q) <-> (p | q) ; sv 1
)"));
  CHECK_FALSE(cited_shape.accepted);
  CHECK(cited_shape.reason == "sv-shape");

  // The conclusion must superpose both sides with one and the same sentence.
  const ProofCheck conclusion_shape = check_proof(parse_proof(R"(system K1
premise p <-> ~~p
1 p <-> ~~p ; premise
2 (p | q) <-> (~~p | r) ; sv 1
)"));
  CHECK_FALSE(conclusion_shape.accepted);
  CHECK(conclusion_shape.reason == "sv-shape");

  // The cited biconditional must be a theorem, not just any premise.
  const ProofCheck side_condition = check_proof(parse_proof(R"(system K1
premise p <-> (p \/ q)
1 p <-> (p \/ q) ; premise
2 (p | r) <-> ((p \/ q) | r) ; sv 1
)"));
  CHECK_FALSE(side_condition.accepted);
  CHECK(side_condition.line == 2);
  CHECK(side_condition.reason == "sv-side-condition-failed");
}

TEST_CASE("the first failing line is reported") {
  const ProofCheck result = check_proof(parse_proof(R"(system K0
1 q ; ax S1
2 r ; ax S2
)"));
  CHECK_FALSE(result.accepted);
  CHECK(result.line == 1);
}

TEST_CASE("semantic oracles decide theoremhood and consistency") {
  CHECK(theoremhood_k0(parse("p -> (p | p)")));
  CHECK(theoremhood_k0(parse("(p & q) -> (p | q)")));
  CHECK_FALSE(theoremhood_k0(parse("(p \\/ q) -> (p | q)")));
  CHECK(consistent_k0({parse("p | q"), parse("~p")}));
  CHECK_FALSE(consistent_k0({parse("p"), parse("~p")}));
}
