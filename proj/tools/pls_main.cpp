#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pls/calculus.hpp"
#include "pls/collapse.hpp"
#include "pls/decision.hpp"
#include "pls/error.hpp"
#include "pls/model_io.hpp"
#include "pls/parser.hpp"
#include "pls/sentence.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string class_name = "f";
  std::string sentence;
  std::string file;
  std::string premises_file;
  std::string model_file;
  std::string proof_file;
  std::string reading = "and";
  std::size_t max_patterns = pls::kDefaultPatternCap;
  bool as_json = false;
};

pls::ChoiceClass class_or_throw(const std::string& name) {
  const auto c = pls::choice_class_from_name(name);
  if (!c) throw pls::Error("unknown class '" + name + "'");
  return *c;
}

pls::DecisionOptions decision_options(const Options& opt) {
  pls::DecisionOptions out;
  out.max_patterns = opt.max_patterns;
  return out;
}

// One sentence per line; '#' comments and blank lines are skipped.
std::vector<pls::Sentence> read_sentence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pls::Error("cannot open sentence file: " + path);
  std::vector<pls::Sentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(pls::parse(line));
  }
  return out;
}

json witness_json(const pls::Verdict& v) {
  return json::parse(pls::model_to_json(*v.assignment, *v.model));
}

void print_witness(const pls::Verdict& v) {
  std::cout << pls::model_to_json(*v.assignment, *v.model) << "\n";
}

int run_taut(const Options& opt) {
  const auto c = class_or_throw(opt.class_name);
  const auto v = pls::is_tautology(pls::parse(opt.sentence), c, decision_options(opt));
  if (opt.as_json) {
    json doc;
    doc["tautology"] = v.value;
    if (!v.value) doc["countermodel"] = witness_json(v);
    std::cout << doc.dump(2) << "\n";
  } else if (v.value) {
    std::cout << "tautology\n";
  } else {
    std::cout << "not a tautology; countermodel:\n";
    print_witness(v);
  }
  return v.value ? 0 : 1;
}

int run_sat(const Options& opt) {
  const auto c = class_or_throw(opt.class_name);
  const auto sentences = read_sentence_file(opt.file);
  const auto v = pls::is_satisfiable(sentences, c, decision_options(opt));
  if (opt.as_json) {
    json doc;
    doc["satisfiable"] = v.value;
    if (v.value) doc["model"] = witness_json(v);
    std::cout << doc.dump(2) << "\n";
  } else if (v.value) {
    std::cout << "satisfiable; model:\n";
    print_witness(v);
  } else {
    std::cout << "unsatisfiable\n";
  }
  return v.value ? 0 : 1;
}

int run_entail(const Options& opt) {
  const auto c = class_or_throw(opt.class_name);
  const auto premises = read_sentence_file(opt.premises_file);
  const auto v = pls::entails(premises, pls::parse(opt.sentence), c,
                              decision_options(opt));
  if (opt.as_json) {
    json doc;
    doc["entailed"] = v.value;
    if (!v.value) doc["countermodel"] = witness_json(v);
    std::cout << doc.dump(2) << "\n";
  } else if (v.value) {
    std::cout << "entailed\n";
  } else {
    std::cout << "not entailed; countermodel:\n";
    print_witness(v);
  }
  return v.value ? 0 : 1;
}

int run_eval(const Options& opt) {
  const auto model = pls::read_model_file(opt.model_file);
  const bool value =
      pls::model_check(model.assignment, model.model, pls::parse(opt.sentence));
  if (opt.as_json)
    std::cout << json{{"value", value}}.dump(2) << "\n";
  else
    std::cout << (value ? "true" : "false") << "\n";
  return value ? 0 : 1;
}

int run_collapse(const Options& opt) {
  const auto model = pls::read_model_file(opt.model_file);
  const auto result = pls::collapse(model.model, pls::parse(opt.sentence));
  if (opt.as_json)
    std::cout << json{{"result", result.text()}}.dump(2) << "\n";
  else
    std::cout << result.text() << "\n";
  return 0;
}

int run_patterns(const Options& opt) {
  const auto patterns =
      pls::enumerate_collapses(pls::parse(opt.sentence), opt.max_patterns);
  if (opt.as_json) {
    json list = json::array();
    for (const auto& p : patterns) {
      json commitments = json::array();
      for (const auto& [pair, choice] : p.commitments)
        commitments.push_back({{"pair", {pair.first.text(), pair.second.text()}},
                               {"choice", choice.text()}});
      list.push_back({{"result", p.result.text()}, {"commitments", commitments}});
    }
    std::cout << json{{"patterns", list}}.dump(2) << "\n";
  } else {
    for (const auto& p : patterns) {
      std::cout << p.result.text();
      if (!p.commitments.empty()) {
        std::cout << "  via";
        for (const auto& [pair, choice] : p.commitments)
          std::cout << "  f(" << pair.first.text() << ", " << pair.second.text()
                    << ") = " << choice.text();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_dual(const Options& opt) {
  const auto result = pls::dual(pls::parse(opt.sentence));
  if (opt.as_json)
    std::cout << json{{"result", result.text()}}.dump(2) << "\n";
  else
    std::cout << result.text() << "\n";
  return 0;
}

int run_interpret(const Options& opt) {
  if (opt.reading != "and" && opt.reading != "or")
    throw pls::Error("--as must be 'and' or 'or'");
  const auto reading = opt.reading == "and" ? pls::SupReading::AsAnd
                                            : pls::SupReading::AsOr;
  const auto result = pls::interpret(pls::parse(opt.sentence), reading);
  if (opt.as_json)
    std::cout << json{{"result", result.text()}}.dump(2) << "\n";
  else
    std::cout << result.text() << "\n";
  return 0;
}

int run_check_proof(const Options& opt) {
  const auto script = pls::read_proof_file(opt.proof_file);
  const auto check = pls::check_proof(script, decision_options(opt));
  if (opt.as_json) {
    json doc;
    doc["accepted"] = check.accepted;
    if (!check.accepted) {
      doc["line"] = check.line;
      doc["reason"] = check.reason;
    }
    std::cout << doc.dump(2) << "\n";
  } else if (check.accepted) {
    std::cout << "accepted\n";
  } else {
    std::cout << "rejected at line " << check.line << ": " << check.reason << "\n";
  }
  return check.accepted ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures and proof checking for the superposition "
               "connective"};
  app.require_subcommand(1);

  Options opt;
  int (*action)(const Options&) = nullptr;

  const std::string class_help =
      "Choice-function class: f, asso, reg, reg*, dec, dec-tb, dec-bt, dec-top, "
      "dec-bot";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.as_json, "Emit a single JSON document");
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--max-patterns", opt.max_patterns,
                    "Collapse-pattern cap (default 65536)")
        ->check(CLI::PositiveNumber);
  };

  auto* taut = app.add_subcommand("taut", "Decide tautology in a class");
  taut->add_option("--class", opt.class_name, class_help)->required();
  taut->add_option("sentence", opt.sentence, "Sentence to decide")->required();
  add_cap(taut);
  add_common(taut);
  taut->callback([&] { action = run_taut; });

  auto* sat = app.add_subcommand("sat", "Decide satisfiability of a sentence file");
  sat->add_option("--class", opt.class_name, class_help)->required();
  sat->add_option("--file", opt.file, "File with one sentence per line")->required();
  add_cap(sat);
  add_common(sat);
  sat->callback([&] { action = run_sat; });

  auto* entail = app.add_subcommand("entail", "Decide entailment from premises");
  entail->add_option("--class", opt.class_name, class_help)->required();
  entail->add_option("--premises", opt.premises_file,
                     "File with one premise per line")
      ->required();
  entail->add_option("sentence", opt.sentence, "Conclusion")->required();
  add_cap(entail);
  add_common(entail);
  entail->callback([&] { action = run_entail; });

  auto* eval = app.add_subcommand("eval", "Evaluate a sentence in a model file");
  eval->add_option("--model", opt.model_file, "Model JSON file")->required();
  eval->add_option("sentence", opt.sentence, "Sentence to evaluate")->required();
  add_common(eval);
  eval->callback([&] { action = run_eval; });

  auto* coll = app.add_subcommand("collapse", "Collapse a sentence under a model");
  coll->add_option("--model", opt.model_file, "Model JSON file")->required();
  coll->add_option("sentence", opt.sentence, "Sentence to collapse")->required();
  add_common(coll);
  coll->callback([&] { action = run_collapse; });

  auto* patterns = app.add_subcommand("patterns", "List all collapse patterns");
  patterns->add_option("sentence", opt.sentence, "Sentence to analyze")->required();
  add_cap(patterns);
  add_common(patterns);
  patterns->callback([&] { action = run_patterns; });

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual of a sentence");
  dual_cmd->add_option("sentence", opt.sentence, "Sentence to dualize")->required();
  add_common(dual_cmd);
  dual_cmd->callback([&] { action = run_dual; });

  auto* interp = app.add_subcommand("interpret",
                                    "Read superposition classically (and/or)");
  interp->add_option("--as", opt.reading, "Reading: and | or")->required();
  interp->add_option("sentence", opt.sentence, "Sentence to interpret")->required();
  add_common(interp);
  interp->callback([&] { action = run_interpret; });

  auto* check = app.add_subcommand("check-proof", "Check a proof script");
  check->add_option("file", opt.proof_file, "Proof file")->required();
  add_cap(check);
  add_common(check);
  check->callback([&] { action = run_check_proof; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action(opt);
  } catch (const pls::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
