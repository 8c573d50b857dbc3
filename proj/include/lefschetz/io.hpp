#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "lefschetz/groebner.hpp"
#include "lefschetz/module.hpp"
#include "lefschetz/presentation.hpp"

namespace lefschetz {

using json = nlohmann::ordered_json;

/// Reads a JSON document; throws ValidationError naming the file and the
/// byte offset of a syntax error.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

/// {"kind": "presentation", "vars": [...], "a": [...], "b": [...], "entries": [[...]]}
RawPresentation raw_presentation_from_json(const json& doc);
GradedPresentation presentation_from_json(const json& doc);
json presentation_to_json(const GradedPresentation& p);

/// {"kind": "structure", "r": r, "t0": t0, "dims": [...], "matrices": {"i,j": [[...]]}}
/// with one-based variable index i and degree j; entries are integers or
/// "p/q" strings.
ArtinianGradedModule module_from_structure(const json& doc);
json module_to_json(const ArtinianGradedModule& N);

/// A presentation or structure file, dispatched on "kind".
using ModuleInput = std::variant<GradedPresentation, ArtinianGradedModule>;
ModuleInput load_input(const std::string& path);

json rational_to_json(const Rational& q);
json ideal_to_json(const DualIdeal& I);
std::string ideal_to_string(const DualIdeal& I);

}  // namespace lefschetz
