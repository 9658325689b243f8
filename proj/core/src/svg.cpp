#include "toricsr/svg.hpp"

#include <algorithm>
#include <sstream>

#include "toricsr/geometry.hpp"

namespace toricsr {

namespace {

constexpr std::int64_t kSize = 480;
constexpr std::int64_t kCenter = kSize / 2;
constexpr std::int64_t kReach = 200;

struct Viewport {
  std::int64_t scale;
  [[nodiscard]] std::int64_t x(std::int64_t v) const { return kCenter + scale * v; }
  [[nodiscard]] std::int64_t y(std::int64_t v) const { return kCenter - scale * v; }
};

}  // namespace

std::string render_gale_svg(const ReducedGaleConfiguration& g, std::span<const Vec2> h_core) {
  std::int64_t extent = 1;
  for (Vec2 v : g.rows) extent = std::max(extent, norm_inf(v));
  for (Vec2 v : h_core) extent = std::max(extent, norm_inf(v));
  const Viewport vp{std::max<std::int64_t>(1, kReach / extent)};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  s << "  <defs>\n"
       "    <marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
       "orient=\"auto-start-reverse\">\n"
       "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/>\n"
       "    </marker>\n"
       "  </defs>\n";
  s << "  <rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
  s << "  <line class=\"axis\" x1=\"0\" y1=\"" << kCenter << "\" x2=\"" << kSize << "\" y2=\"" << kCenter
    << "\" stroke=\"#bbbbbb\"/>\n";
  s << "  <line class=\"axis\" x1=\"" << kCenter << "\" y1=\"0\" x2=\"" << kCenter << "\" y2=\"" << kSize
    << "\" stroke=\"#bbbbbb\"/>\n";

  const std::vector<Vec2> hull = convex_hull(g.rows);
  s << "  <polygon class=\"hull\" points=\"";
  for (std::size_t i = 0; i < hull.size(); ++i) s << (i ? " " : "") << vp.x(hull[i].x) << ',' << vp.y(hull[i].y);
  s << "\" fill=\"none\" stroke=\"#3366cc\" stroke-dasharray=\"6,4\"/>\n";

  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    const Vec2 v = g.rows[i];
    s << "  <line class=\"arrow\" x1=\"" << kCenter << "\" y1=\"" << kCenter << "\" x2=\"" << vp.x(v.x) << "\" y2=\""
      << vp.y(v.y) << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
    s << "  <text class=\"label\" x=\"" << vp.x(v.x) + 6 << "\" y=\"" << vp.y(v.y) - 6
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << i + 1 << "</text>\n";
  }
  for (Vec2 h : h_core)
    s << "  <circle class=\"dot\" cx=\"" << vp.x(h.x) << "\" cy=\"" << vp.y(h.y) << "\" r=\"4\" fill=\"#cc3333\"/>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace toricsr
