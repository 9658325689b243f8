#include "toricsr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "toricsr/errors.hpp"

namespace toricsr::oracle {

namespace {

constexpr std::int64_t kMinI64 = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMaxI64 = std::numeric_limits<std::int64_t>::max();

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::int64_t narrow(const BigInt& v) {
  if (v > kMaxI64 || v < kMinI64) throw OverflowError("polygon coordinate does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

struct XRange {
  std::int64_t first = 1;
  std::int64_t last = 0;  // empty when first > last
};

// Integer x-range of {alpha : normals[i] . alpha <= rhs[i]} from its
// vertices, computed exactly. Empty if the polygon has no vertex.
XRange vertex_x_range(std::span<const Vec2> normals, std::span<const std::int64_t> rhs) {
  bool any_vertex = false;
  BigInt x_lo, x_hi;
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      BigInt d = BigInt(normals[i].x) * normals[j].y - BigInt(normals[i].y) * normals[j].x;
      if (d == 0) continue;
      BigInt xn = BigInt(rhs[i]) * normals[j].y - BigInt(rhs[j]) * normals[i].y;
      BigInt yn = BigInt(normals[i].x) * rhs[j] - BigInt(normals[j].x) * rhs[i];
      if (d < 0) {
        d = -d;
        xn = -xn;
        yn = -yn;
      }
      bool feasible = true;
      for (std::size_t k = 0; k < normals.size() && feasible; ++k)
        feasible = BigInt(normals[k].x) * xn + BigInt(normals[k].y) * yn <= BigInt(rhs[k]) * d;
      if (!feasible) continue;
      const BigInt lo = ceil_div(xn, d);
      const BigInt hi = floor_div(xn, d);
      if (!any_vertex || lo < x_lo) x_lo = lo;
      if (!any_vertex || hi > x_hi) x_hi = hi;
      any_vertex = true;
    }
  if (!any_vertex) return {};
  return {narrow(x_lo), narrow(x_hi)};
}

// Integer x-range enclosing {alpha : lo[i] <= rows[i] . alpha <= hi[i]}:
// any two independent rows pin alpha inside a parallelogram. Takes the
// narrowest such parallelogram. rows must have rank 2.
XRange slab_x_range(std::span<const Vec2> rows, std::span<const std::int64_t> lo, std::span<const std::int64_t> hi) {
  std::optional<XRange> best;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const std::int64_t d = det(rows[i], rows[j]);
      if (d == 0) continue;
      // d * x = w_i * rows[j].y - w_j * rows[i].y
      const std::int64_t p1 = checked::mul(lo[i], rows[j].y), p2 = checked::mul(hi[i], rows[j].y);
      const std::int64_t q1 = checked::mul(lo[j], rows[i].y), q2 = checked::mul(hi[j], rows[i].y);
      std::int64_t num_lo = checked::sub(std::min(p1, p2), std::max(q1, q2));
      std::int64_t num_hi = checked::sub(std::max(p1, p2), std::min(q1, q2));
      std::int64_t den = d;
      if (den < 0) {
        den = checked::neg(den);
        num_lo = checked::neg(std::exchange(num_hi, checked::neg(num_lo)));
      }
      const XRange r{checked::ceil_div(num_lo, den), checked::floor_div(num_hi, den)};
      if (!best || r.last - r.first < best->last - best->first) best = r;
    }
  if (!best) throw std::invalid_argument("slab_x_range: rows do not span the plane");
  return *best;
}

// Visits every alpha in Z^2 with x in range and normals[i] . alpha <= rhs[i]
// for all i, by increasing x then y. Stops as soon as visit returns false
// and reports whether the scan ran to completion.
template <class Visit>
bool scan_columns(std::span<const Vec2> normals, std::span<const std::int64_t> rhs, XRange range, Visit&& visit) {
  for (std::int64_t x = range.first; x <= range.last; ++x) {
    std::int64_t y_lo = kMinI64;
    std::int64_t y_hi = kMaxI64;
    bool empty = false;
    for (std::size_t k = 0; k < normals.size() && !empty; ++k) {
      const std::int64_t rest = checked::sub(rhs[k], checked::mul(normals[k].x, x));
      if (normals[k].y > 0)
        y_hi = std::min(y_hi, checked::floor_div(rest, normals[k].y));
      else if (normals[k].y < 0)
        y_lo = std::max(y_lo, checked::ceil_div(rest, normals[k].y));
      else if (rest < 0)
        empty = true;
    }
    if (empty) continue;
    if (y_lo == kMinI64 || y_hi == kMaxI64) throw GradingError("polygon is unbounded");
    for (std::int64_t y = y_lo; y <= y_hi; ++y)
      if (!visit(Vec2{x, y})) return false;
  }
  return true;
}

template <class Visit>
bool scan_polygon(std::span<const Vec2> normals, std::span<const std::int64_t> rhs, Visit&& visit) {
  return scan_columns(normals, rhs, vertex_x_range(normals, rhs), std::forward<Visit>(visit));
}

void require_bounded_fibers(const GaleConfiguration& b) {
  if (!is_positively_graded(b)) throw GradingError("configuration is not positively graded; fibers are infinite");
}

ExponentVector subtract_image(const GaleConfiguration& b, std::span<const std::int64_t> v, Vec2 alpha) {
  ExponentVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = checked::sub(w[i], dot(b[i], alpha));
  return w;
}

bool divides(std::span<const std::int64_t> small, std::span<const std::int64_t> big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

FiberEnumeration enumerate_fiber(const GaleConfiguration& b, std::span<const std::int64_t> v) {
  if (v.size() != b.size()) throw std::invalid_argument("enumerate_fiber: length mismatch");
  if (std::any_of(v.begin(), v.end(), [](std::int64_t e) { return e < 0; }))
    throw std::invalid_argument("enumerate_fiber: target has a negative entry");
  require_bounded_fibers(b);

  FiberEnumeration f;
  f.target.assign(v.begin(), v.end());
  scan_polygon(b.rows(), v, [&](Vec2 alpha) {
    f.points.push_back(subtract_image(b, v, alpha));
    return true;
  });
  std::sort(f.points.begin(), f.points.end());
  return f;
}

bool is_indispensable(const GaleConfiguration& b, std::span<const std::int64_t> plus,
                      std::span<const std::int64_t> minus) {
  if (plus.size() != b.size() || minus.size() != b.size())
    throw std::invalid_argument("is_indispensable: length mismatch");
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (plus[i] != 0 && minus[i] != 0) return false;
  if (std::equal(plus.begin(), plus.end(), minus.begin())) return false;
  require_bounded_fibers(b);

  // Stop after three fiber points; the fiber must be exactly {plus, minus}.
  std::vector<ExponentVector> seen;
  scan_polygon(b.rows(), plus, [&](Vec2 alpha) {
    seen.push_back(subtract_image(b, plus, alpha));
    return seen.size() <= 2;
  });
  if (seen.size() != 2) return false;
  const ExponentVector m(minus.begin(), minus.end());
  return std::find(seen.begin(), seen.end(), m) != seen.end();
}

bool is_indispensable(const GaleConfiguration& b, const Binomial& binomial) {
  return is_indispensable(b, binomial.plus(), binomial.minus());
}

std::int64_t default_radius(const GaleConfiguration& b) {
  std::int64_t longest = 0;
  for (Vec2 v : b.rows()) longest = std::max(longest, norm_inf(primitive(rotate90(v))));
  return checked::add(checked::mul(2, longest), 2);
}

GraverEnumeration graver_bruteforce(const GaleConfiguration& b, std::optional<std::int64_t> radius) {
  GraverEnumeration out;
  out.radius = radius.value_or(default_radius(b));
  if (out.radius < 1) throw std::invalid_argument("graver_bruteforce: radius must be positive");
  const std::int64_t r = out.radius;
  const std::size_t n = b.size();

  std::vector<Vec2> normals(2 * n);
  std::vector<std::int64_t> rhs(2 * n);
  for (std::int64_t x = 0; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y) {
      // One of each +/- pair.
      if (x == 0 && y <= 0) continue;
      const Vec2 u{x, y};
      // k * u0 is divisible by u0.
      if (!is_primitive(u)) continue;

      const ExponentVector v = b.apply(u);
      ExponentVector v_plus(n), v_minus(n), v_lo(n);
      for (std::size_t i = 0; i < n; ++i) {
        v_plus[i] = std::max<std::int64_t>(v[i], 0);
        v_minus[i] = std::max<std::int64_t>(-v[i], 0);
        v_lo[i] = -v_minus[i];
        // min(0, v_i) <= b_i . alpha <= max(0, v_i)
        normals[2 * i] = b[i];
        rhs[2 * i] = v_plus[i];
        normals[2 * i + 1] = -b[i];
        rhs[2 * i + 1] = v_minus[i];
      }

      const XRange range = slab_x_range(b.rows(), v_lo, v_plus);
      const bool primitive_u = scan_columns(normals, rhs, range, [&](Vec2 alpha) {
        if (alpha.is_zero() || alpha == u) return true;
        const ExponentVector w = b.apply(alpha);
        ExponentVector w_plus(n), w_minus(n);
        for (std::size_t i = 0; i < n; ++i) {
          w_plus[i] = std::max<std::int64_t>(w[i], 0);
          w_minus[i] = std::max<std::int64_t>(-w[i], 0);
        }
        return !(divides(w_plus, v_plus) && divides(w_minus, v_minus));
      });
      if (!primitive_u) continue;

      out.binomials.insert(Binomial::from_kernel_vector(v));
      if (norm_inf(u) > r - 2) out.shell_warning = true;
    }
  return out;
}

}  // namespace toricsr::oracle
