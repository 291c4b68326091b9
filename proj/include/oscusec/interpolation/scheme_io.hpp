#pragma once

#include <json.hpp>

#include "oscusec/interpolation/fat_points.hpp"
#include "oscusec/interpolation/linear_system.hpp"

namespace oscusec {

// A scheme input file:
//   { "version": 1,
//     "spec":   {"type": "projective", "n": 3, "d": 4}
//             | {"type": "hirzebruch", "n": 1, "a": 2, "b": 3},
//     "points": [ {"m": 3, "loc": "generic", "count": 2},
//                 {"m": 2, "loc": "hyperplane"},
//                 {"m": 1, "loc": "explicit", "coords": [1, 5, 7]} ] }
// "count" defaults to 1. The schema is in schemas/scheme.schema.json.
struct SchemeDocument {
  LinearSystemSpec spec;
  FatPointScheme scheme;
};

inline constexpr int kSchemeFormatVersion = 1;

// All parsers throw InputError on malformed documents.
LinearSystemSpec spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json spec_to_json(const LinearSystemSpec& spec);

SchemeDocument scheme_document_from_json(const nlohmann::json& j);
nlohmann::ordered_json scheme_document_to_json(const SchemeDocument& doc);

}  // namespace oscusec
