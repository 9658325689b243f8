#pragma once

#include <span>
#include <string>

#include "toricsr/gale.hpp"
#include "toricsr/vec2.hpp"

namespace toricsr {

/// Draws the reduced Gale diagram: an arrow (class "arrow") from the origin
/// to each b~_i, a dot (class "dot") at each point of h_core, and the
/// outline of conv(b~_i) (class "hull"), on a fixed 480x480 viewport with
/// integer coordinates.
std::string render_gale_svg(const ReducedGaleConfiguration& g, std::span<const Vec2> h_core);

}  // namespace toricsr
