#include "pls/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pls/error.hpp"
#include "pls/parser.hpp"

namespace pls {

namespace {

using nlohmann::json;

json table_to_json(const ChoiceModel& f) {
  std::vector<std::pair<PairKey, Sentence>> entries(f.entries().begin(),
                                                    f.entries().end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (const auto& [pair, choice] : entries)
    out.push_back({{"pair", {pair.first.text(), pair.second.text()}},
                   {"choice", choice.text()}});
  return out;
}

}  // namespace

std::string model_to_json(const Assignment& m, const ChoiceModel& f) {
  json doc;
  doc["assignment"] = json::object();
  for (const auto& [name, value] : m.values) doc["assignment"][name] = value;
  if (f.order_backed()) {
    json order = json::array();
    for (const Sentence& s : f.order()) order.push_back(s.text());
    doc["order"] = std::move(order);
  } else {
    doc["table"] = table_to_json(f);
  }
  return doc.dump(2);
}

ModelFile model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("model file: ") + e.what());
  }
  if (!doc.is_object()) throw Error("model file: top level must be an object");
  if (!doc.contains("assignment") || !doc["assignment"].is_object())
    throw Error("model file: missing \"assignment\" object");
  if (doc.contains("order") == doc.contains("table"))
    throw Error("model file: exactly one of \"order\" or \"table\" required");

  Assignment m;
  for (const auto& [name, value] : doc["assignment"].items()) {
    if (!value.is_boolean())
      throw Error("model file: assignment value for '" + name +
                  "' must be a boolean");
    m.set(name, value.get<bool>());
  }

  try {
    if (doc.contains("order")) {
      if (!doc["order"].is_array())
        throw Error("model file: \"order\" must be an array");
      std::vector<Sentence> order;
      for (const auto& entry : doc["order"]) {
        if (!entry.is_string())
          throw Error("model file: order members must be sentence strings");
        order.push_back(parse(entry.get<std::string>()));
      }
      return {std::move(m), ChoiceModel::from_order(std::move(order))};
    }
    if (!doc["table"].is_array())
      throw Error("model file: \"table\" must be an array");
    std::vector<std::pair<PairKey, Sentence>> entries;
    for (const auto& entry : doc["table"]) {
      if (!entry.is_object() || !entry.contains("pair") || !entry.contains("choice") ||
          !entry["pair"].is_array() || entry["pair"].size() != 2 ||
          !entry["pair"][0].is_string() || !entry["pair"][1].is_string() ||
          !entry["choice"].is_string())
        throw Error(
            "model file: table entries must be {\"pair\": [s, s], \"choice\": s}");
      entries.push_back({PairKey(parse(entry["pair"][0].get<std::string>()),
                                 parse(entry["pair"][1].get<std::string>())),
                         parse(entry["choice"].get<std::string>())});
    }
    return {std::move(m), ChoiceModel::table(entries)};
  } catch (const ParseError& e) {
    throw Error(std::string("model file: bad sentence: ") + e.what());
  }
}

ModelFile read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

void write_model_file(const std::string& path, const Assignment& m,
                      const ChoiceModel& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file: " + path);
  out << model_to_json(m, f) << '\n';
}

}  // namespace pls
