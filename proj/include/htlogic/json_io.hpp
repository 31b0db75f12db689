#pragma once

// JSON encodings.
//
// Algebra: { "elements": [e], "le": [[e, e]], "bot": e, "top": e,
//            "s1": {e: e}, "s2": {e: e}, "c"?: {e: e},
//            "imp"?: {e: {e: e}}, "neg"?: {e: e} }
// Frame:   { "states": [w], "R": [[w, w]], "s1": {w: w}, "s2": {w: w} }
// Model:   { "frame": <frame object or path string>, "m": {var: [w]} }
//
// Unknown fields are rejected with SchemaError.

#include <functional>
#include <string>

#include "json.hpp"

#include "htlogic/algebra.hpp"
#include "htlogic/frame.hpp"

namespace htlogic {

using Json = nlohmann::ordered_json;

Json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const Json& j);

Json frame_to_json(const HTFrame& k);
HTFrame frame_from_json(const Json& j);

/// Resolves a model's "frame" field when it is a string.
using FrameLoader = std::function<HTFrame(const std::string&)>;

Json model_to_json(const HTModel& m);
HTModel model_from_json(const Json& j, const FrameLoader& load_frame = {});

Json assignment_to_json(const Assignment& v, const FiniteAlgebra& a);
Json valuation_to_json(const Valuation& m, const HTFrame& k);

/// Reads and parses a JSON file; SchemaError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace htlogic
