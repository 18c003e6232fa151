#pragma once

#include <string>

#include "pls/choice.hpp"
#include "pls/truth.hpp"

namespace pls {

// A model pair as stored on disk: a truth assignment plus a choice model,
// either order-backed ("order": [sentence, ...], earlier wins) or an explicit
// table ("table": [{"pair": [s, s], "choice": s}, ...]).
struct ModelFile {
  Assignment assignment;
  ChoiceModel model;
};

// Single JSON document; keys and table entries are emitted in sorted order so
// output is reproducible.
std::string model_to_json(const Assignment& m, const ChoiceModel& f);

// Throws Error (with context) on malformed JSON, non-sentence strings,
// duplicate order members, or table choices outside their pair.
ModelFile model_from_json(const std::string& text);

ModelFile read_model_file(const std::string& path);
void write_model_file(const std::string& path, const Assignment& m,
                      const ChoiceModel& f);

}  // namespace pls
