#pragma once

#include "gm/graph.hpp"

#include <array>
#include <utility>
#include <vector>

namespace gm {

using Triangle = std::array<Index, 3>;
using Edge = std::pair<Index, Index>; // first < second

/// Incremental Bowyer-Watson triangulation of a planar point set (ghost-vertex hull).
/// Returns an empty list when all points are collinear.
std::vector<Triangle> delaunay_triangulation(const std::vector<Point2>& points);

/// Sorted, deduplicated edge list of a triangulation.
std::vector<Edge> triangulation_edges(const std::vector<Triangle>& triangles);

} // namespace gm
