#pragma once

#include <span>
#include <vector>

#include "toricsr/vec2.hpp"

namespace toricsr {

/// Vertices of the convex hull in counterclockwise order, starting from the
/// lowest-leftmost point. Points in the relative interior of edges are not
/// vertices. Degenerate inputs return one or two points.
std::vector<Vec2> convex_hull(std::span<const Vec2> points);

}  // namespace toricsr
