#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toricsr/gale.hpp"
#include "toricsr/vec2.hpp"

namespace toricsr {

/// Pointed cone spanned by two primitive vectors with det(a, b) > 0.
class Cone2D {
 public:
  /// Throws std::invalid_argument if a or b is not primitive or det(a, b) <= 0.
  Cone2D(Vec2 a, Vec2 b);

  [[nodiscard]] Vec2 a() const { return a_; }
  [[nodiscard]] Vec2 b() const { return b_; }
  [[nodiscard]] std::int64_t det() const { return toricsr::det(a_, b_); }
  [[nodiscard]] bool contains(Vec2 v) const { return toricsr::det(a_, v) >= 0 && toricsr::det(v, b_) >= 0; }

  friend bool operator==(const Cone2D&, const Cone2D&) = default;

 private:
  Vec2 a_;
  Vec2 b_;
};

/// Minimal generating set of the monoid cone(a, b) ∩ Z^2, in counterclockwise
/// order from a to b.
///
/// Every element lies in the parallelogram {s a + t b : 0 <= s, t <= 1}, so
/// the lattice points of that parallelogram are enumerated and the
/// irreducible ones kept: a point is reducible exactly when subtracting a
/// smaller irreducible leaves a nonzero point of the cone.
std::vector<Vec2> hilbert_basis(const Cone2D& cone);

/// Lattice points on the bounded boundary chain of
/// conv((cone ∩ Z^2) \ {0}), i.e. the points visible from the origin.
/// Independent geometric route to the same set as hilbert_basis.
std::vector<Vec2> hilbert_basis_by_visibility(const Cone2D& cone);

/// Union of the Hilbert bases of the cones between consecutive rays of a
/// planar fan, with the cones each vector came from.
struct HilbertBasisSet {
  std::vector<Cone2D> cones;                        ///< fan cones, counterclockwise
  std::vector<Vec2> vectors;                        ///< sorted by polar angle
  std::vector<std::vector<std::size_t>> provenance;  ///< indices into cones, per vector

  [[nodiscard]] bool contains(Vec2 v) const;
};

/// Throws GradingError if two consecutive rays span an angle >= pi.
HilbertBasisSet fan_hilbert_union(std::span<const Vec2> directions);
HilbertBasisSet fan_hilbert_union(const ReducedGaleConfiguration& g);

/// {u in H : -u in H}, sorted by polar angle.
std::vector<Vec2> symmetric_core(const HilbertBasisSet& h);
std::vector<Vec2> symmetric_core(std::span<const Vec2> h);

}  // namespace toricsr
