#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toricsr/integer_matrix.hpp"
#include "toricsr/vec2.hpp"

namespace toricsr {

/// Gale vectors b_1..b_n: the rows of an n x 2 matrix whose columns form a
/// basis of ker_Z A. Rows are never zero.
class GaleConfiguration {
 public:
  /// Throws ZeroRowError if a row is zero and std::invalid_argument if empty.
  explicit GaleConfiguration(std::vector<Vec2> rows, std::optional<IntegerMatrix> source = std::nullopt);

  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] const std::vector<Vec2>& rows() const { return rows_; }
  [[nodiscard]] Vec2 operator[](std::size_t i) const { return rows_[i]; }
  /// The matrix A this configuration was computed from, if any.
  [[nodiscard]] const std::optional<IntegerMatrix>& source() const { return source_; }

  /// B * u as an integer vector of length n.
  [[nodiscard]] std::vector<std::int64_t> apply(Vec2 u) const;
  /// The n x 2 matrix with rows b_i.
  [[nodiscard]] IntegerMatrix matrix() const;

 private:
  std::vector<Vec2> rows_;
  std::optional<IntegerMatrix> source_;
};

/// Reduced Gale vectors: b~_i = (-b_i2, b_i1) / gcd(b_i1, b_i2), kept in
/// variable order, together with the counterclockwise order of the rows.
struct ReducedGaleConfiguration {
  std::vector<Vec2> rows;
  /// Permutation of row indices by polar angle in [0, 2*pi); rows on the
  /// same ray are adjacent and ordered by index.
  std::vector<std::size_t> angular_order;

  /// Distinct rays in counterclockwise order.
  [[nodiscard]] std::vector<Vec2> distinct_directions() const;
};

struct Bouquet {
  std::vector<std::size_t> members;  ///< 0-based variable indices, ascending
  Vec2 direction;                    ///< primitive, first nonzero coordinate positive
  bool mixed = false;                ///< both rays of the line occur

  friend bool operator==(const Bouquet&, const Bouquet&) = default;
};

/// Gale transform of a rank n-2 matrix.
///
/// The kernel basis is Lagrange-reduced, each column is signed so its first
/// nonzero entry is positive, and the two columns are sorted
/// lexicographically. Throws RankError when rank(A) != n - 2 or n < 3,
/// ZeroRowError when some b_i vanishes, and OverflowError when an entry of
/// the reduced basis does not fit in 64 bits.
GaleConfiguration gale_transform(const IntegerMatrix& a);

ReducedGaleConfiguration reduce(const GaleConfiguration& b);

/// True iff the only alpha in Z^2 with B alpha >= 0 is alpha = 0, i.e. every
/// counterclockwise gap between consecutive Gale directions is below pi.
bool is_positively_graded(const GaleConfiguration& b);
bool is_positively_graded(std::span<const Vec2> vectors);

/// Maximal sets of variables whose Gale vectors are colinear, ordered by
/// smallest member.
std::vector<Bouquet> bouquets(const GaleConfiguration& b);
std::vector<Bouquet> bouquets(std::span<const Vec2> vectors);

/// Sorts directions by angle and drops repeated rays.
std::vector<Vec2> distinct_rays(std::span<const Vec2> vectors);

}  // namespace toricsr
