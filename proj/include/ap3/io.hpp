#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ap3/space.hpp"

namespace ap3 {

// Point-set file format: one JSON document
//   { "space": { "kind": "...", ...params }, "points": [ ... ] }
// Scalars serialize as "p/q" (or "p" when the denominator is 1), tree points
// as arrays of child indices, lattice points as integer arrays, poles as
// "N"/"S", radial points as ["radius","turn"], bipartite points as
// ["L",i] / ["R",i], graph points as vertex ids. Parsing round-trips
// bit-exactly because scalars are stored canonically.

nlohmann::ordered_json space_to_json(const Space& space);
nlohmann::ordered_json pointset_to_json(const PointSet& A);

Space space_from_json(const nlohmann::json& doc);
PointSet pointset_from_json(const nlohmann::json& doc);

// Serialize with a trailing newline, ready to write to a file.
std::string write_pointset(const PointSet& A);

// Parse from text. Malformed JSON raises std::runtime_error naming the byte
// offset; structurally bad documents raise std::invalid_argument.
PointSet read_pointset(const std::string& text);

PointSet load_pointset_file(const std::string& path);
void save_pointset_file(const PointSet& A, const std::string& path);

}  // namespace ap3
