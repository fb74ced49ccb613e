#pragma once

#include "hyperbicomb/hausdorff.hpp"

#include <string>
#include <vector>

namespace hyperbicomb {

// Figure for a geodesic trace: one layer per snapshot, stacked horizontal bars for
// intervals, overlaid outlines for polygons, degenerate bodies drawn as dot or line
// marks. Bytes are deterministic for fixed input. Needs at least two snapshots of one
// planar or line kind; subtree bodies are rejected (they have no canonical planar
// embedding).
std::string render_svg(const std::vector<ConvexBody>& snapshots);

void emit_svg(const std::vector<ConvexBody>& snapshots, const std::string& path);

}  // namespace hyperbicomb
