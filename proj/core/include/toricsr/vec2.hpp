#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

#include "toricsr/checked.hpp"

namespace toricsr {

/// A point of Z^2. All arithmetic is overflow-checked.
struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Vec2&, const Vec2&) = default;

  [[nodiscard]] bool is_zero() const { return x == 0 && y == 0; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {checked::add(a.x, b.x), checked::add(a.y, b.y)}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {checked::sub(a.x, b.x), checked::sub(a.y, b.y)}; }
inline Vec2 operator-(Vec2 a) { return {checked::neg(a.x), checked::neg(a.y)}; }
inline Vec2 operator*(std::int64_t k, Vec2 a) { return {checked::mul(k, a.x), checked::mul(k, a.y)}; }

inline std::ostream& operator<<(std::ostream& os, Vec2 v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

/// a.x * b.y - a.y * b.x; positive when b is counterclockwise of a.
inline std::int64_t det(Vec2 a, Vec2 b) {
  return checked::sub(checked::mul(a.x, b.y), checked::mul(a.y, b.x));
}

inline std::int64_t dot(Vec2 a, Vec2 b) {
  return checked::add(checked::mul(a.x, b.x), checked::mul(a.y, b.y));
}

inline std::int64_t norm_inf(Vec2 v) { return std::max(checked::abs(v.x), checked::abs(v.y)); }

inline std::int64_t content(Vec2 v) { return std::gcd(checked::abs(v.x), checked::abs(v.y)); }

inline bool is_primitive(Vec2 v) { return content(v) == 1; }

/// v divided by the gcd of its entries. v must be nonzero.
inline Vec2 primitive(Vec2 v) {
  const std::int64_t g = content(v);
  return {v.x / g, v.y / g};
}

/// Counterclockwise rotation by 90 degrees.
inline Vec2 rotate90(Vec2 v) { return {checked::neg(v.y), v.x}; }

/// Representative of the line through v: first nonzero coordinate positive.
inline Vec2 line_representative(Vec2 v) {
  const Vec2 p = primitive(v);
  return (p.x > 0 || (p.x == 0 && p.y > 0)) ? p : -p;
}

inline bool same_ray(Vec2 a, Vec2 b) { return det(a, b) == 0 && dot(a, b) > 0; }

/// Strict weak order by polar angle in [0, 2*pi); vectors on a common ray compare equal.
inline bool angle_less(Vec2 a, Vec2 b) {
  const auto half = [](Vec2 v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

}  // namespace toricsr
