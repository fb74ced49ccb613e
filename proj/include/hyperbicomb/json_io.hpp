#pragma once

#include "hyperbicomb/hausdorff.hpp"

#include <json.hpp>

#include <string>

namespace hyperbicomb {

// Space descriptors:
//   {"kind": "normed", "dim": 1|2, "norm": "l1"|"l2"|"linf"}   (dim up to 8 with "l2")
//   {"kind": "rtree", "vertices": [ids], "edges": [{"id", "tail", "head", "length"}]}
nlohmann::json space_to_json(const BaseSpace& s);
BaseSpace space_from_json(const nlohmann::json& j);

// Points: {"vec": [..]} or {"edge": id, "offset": r}.
nlohmann::json point_to_json(const BasePoint& p);
BasePoint point_from_json(const BaseSpace& s, const nlohmann::json& j);

// Bodies: {"interval": [lo, hi]}, {"polygon": [[x, y], ..]}, or
// {"subtree": [{"edge", "from", "to"}, ..]}.
nlohmann::json body_to_json(const ConvexBody& A);
ConvexBody body_from_json(const BaseSpace& s, const nlohmann::json& j);

// Finite sets: {"points": [..]}.
nlohmann::json finite_set_to_json(const FiniteCompactSet& A);
FiniteCompactSet finite_set_from_json(const BaseSpace& s, const nlohmann::json& j);

nlohmann::json operand_to_json(const SetOperand& A);
// Dispatches on the top-level key.
SetOperand operand_from_json(const BaseSpace& s, const nlohmann::json& j);

// Parses a whole file; errors carry the path.
nlohmann::json load_json_file(const std::string& path);

}  // namespace hyperbicomb
