#include "toricsr/hilbert2d.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toricsr/errors.hpp"
#include "toricsr/geometry.hpp"

namespace toricsr {

Cone2D::Cone2D(Vec2 a, Vec2 b) : a_(a), b_(b) {
  if (a.is_zero() || b.is_zero() || !is_primitive(a) || !is_primitive(b))
    throw std::invalid_argument("Cone2D: generators must be primitive");
  if (toricsr::det(a, b) <= 0) throw std::invalid_argument("Cone2D: det(a, b) must be positive");
}

namespace {

struct LatticePoint {
  Vec2 p;
  std::int64_t level;  // det * (s + t) where p = s a + t b
};

// Nonzero lattice points of the closed parallelogram {s a + t b : 0 <= s, t <= 1}.
std::vector<LatticePoint> parallelogram_points(const Cone2D& cone) {
  const Vec2 a = cone.a();
  const Vec2 b = cone.b();
  const Vec2 c = a + b;
  const std::int64_t d = cone.det();
  const std::int64_t x0 = std::min({std::int64_t{0}, a.x, b.x, c.x});
  const std::int64_t x1 = std::max({std::int64_t{0}, a.x, b.x, c.x});
  const std::int64_t y0 = std::min({std::int64_t{0}, a.y, b.y, c.y});
  const std::int64_t y1 = std::max({std::int64_t{0}, a.y, b.y, c.y});
  std::vector<LatticePoint> pts;
  for (std::int64_t x = x0; x <= x1; ++x)
    for (std::int64_t y = y0; y <= y1; ++y) {
      const Vec2 p{x, y};
      const std::int64_t s = det(p, b);
      const std::int64_t t = det(a, p);
      if (s < 0 || t < 0 || s > d || t > d || p.is_zero()) continue;
      pts.push_back({p, checked::add(s, t)});
    }
  return pts;
}

// Points on distinct rays inside a cone of angle < pi.
void sort_counterclockwise(std::vector<Vec2>& v) {
  std::sort(v.begin(), v.end(), [](Vec2 p, Vec2 q) { return det(p, q) > 0; });
}

}  // namespace

std::vector<Vec2> hilbert_basis(const Cone2D& cone) {
  std::vector<LatticePoint> pts = parallelogram_points(cone);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const LatticePoint& l, const LatticePoint& r) { return l.level < r.level; });
  std::vector<Vec2> irreducible;
  for (const LatticePoint& lp : pts) {
    const bool reducible = std::any_of(irreducible.begin(), irreducible.end(),
                                       [&](Vec2 g) { return cone.contains(lp.p - g); });
    if (!reducible) irreducible.push_back(lp.p);
  }
  sort_counterclockwise(irreducible);
  return irreducible;
}

std::vector<Vec2> hilbert_basis_by_visibility(const Cone2D& cone) {
  std::vector<Vec2> pts;
  for (const LatticePoint& lp : parallelogram_points(cone)) pts.push_back(lp.p);
  const std::vector<Vec2> hull = convex_hull(pts);

  // The origin lies strictly outside every edge of the chain facing it.
  std::set<Vec2> visible;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec2 p = hull[i];
    const Vec2 q = hull[(i + 1) % hull.size()];
    const Vec2 edge = q - p;
    if (det(edge, -p) >= 0) continue;
    const std::int64_t steps = content(edge);
    const Vec2 step{edge.x / steps, edge.y / steps};
    for (std::int64_t k = 0; k <= steps; ++k) visible.insert(p + k * step);
  }
  std::vector<Vec2> out(visible.begin(), visible.end());
  sort_counterclockwise(out);
  return out;
}

bool HilbertBasisSet::contains(Vec2 v) const {
  const auto it = std::lower_bound(vectors.begin(), vectors.end(), v, [](Vec2 l, Vec2 r) { return angle_less(l, r); });
  return it != vectors.end() && *it == v;
}

HilbertBasisSet fan_hilbert_union(std::span<const Vec2> directions) {
  const std::vector<Vec2> rays = distinct_rays(directions);
  HilbertBasisSet out;
  if (rays.size() < 3) throw GradingError("fewer than three distinct Gale directions; not positively graded");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Vec2 a = rays[i];
    const Vec2 b = rays[(i + 1) % rays.size()];
    if (det(a, b) <= 0) {
      std::ostringstream msg;
      msg << "directions " << a << " and " << b << " span an angle of at least pi; not positively graded";
      throw GradingError(msg.str());
    }
    out.cones.emplace_back(a, b);
  }

  std::map<Vec2, std::vector<std::size_t>> found;
  for (std::size_t i = 0; i < out.cones.size(); ++i)
    for (Vec2 h : hilbert_basis(out.cones[i])) found[h].push_back(i);

  std::vector<std::pair<Vec2, std::vector<std::size_t>>> entries(found.begin(), found.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& l, const auto& r) { return angle_less(l.first, r.first); });
  for (auto& [v, cones] : entries) {
    out.vectors.push_back(v);
    out.provenance.push_back(std::move(cones));
  }
  return out;
}

HilbertBasisSet fan_hilbert_union(const ReducedGaleConfiguration& g) { return fan_hilbert_union(g.rows); }

std::vector<Vec2> symmetric_core(std::span<const Vec2> h) {
  const std::set<Vec2> all(h.begin(), h.end());
  std::vector<Vec2> core;
  for (Vec2 v : h)
    if (all.contains(-v)) core.push_back(v);
  std::sort(core.begin(), core.end(), [](Vec2 l, Vec2 r) { return angle_less(l, r); });
  return core;
}

std::vector<Vec2> symmetric_core(const HilbertBasisSet& h) { return symmetric_core(h.vectors); }

}  // namespace toricsr
