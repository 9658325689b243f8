#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toricsr/gale.hpp"
#include "toricsr/toric.hpp"

// Brute-force verifiers built directly on the definitions. Nothing here
// touches the Hilbert-basis code path.
namespace toricsr::oracle {

struct FiberEnumeration {
  ExponentVector target;
  std::vector<ExponentVector> points;  ///< sorted; contains target
};

/// All w in N^n with A w = A v, found as v - B alpha over the lattice points
/// alpha of the polygon {B alpha <= v}. Throws GradingError if that polygon
/// is unbounded and std::invalid_argument if v has a negative entry.
FiberEnumeration enumerate_fiber(const GaleConfiguration& b, std::span<const std::int64_t> v);

/// F(plus) = {plus, minus} and the supports are disjoint.
bool is_indispensable(const GaleConfiguration& b, const Binomial& binomial);
/// Same test on raw exponent vectors, which need not have disjoint supports.
bool is_indispensable(const GaleConfiguration& b, std::span<const std::int64_t> plus,
                      std::span<const std::int64_t> minus);

struct GraverEnumeration {
  BinomialSet binomials;
  std::int64_t radius = 0;
  /// Some primitive element lies within 2 of the box boundary, so the box
  /// may be too small.
  bool shell_warning = false;
};

/// 2 * max ||b~_i||_inf + 2.
std::int64_t default_radius(const GaleConfiguration& b);

/// Primitive binomials p^{(Bu)+} - p^{(Bu)-} for u in [-radius, radius]^2.
/// u is primitive when no nonzero kernel vector w != Bu has w+ <= (Bu)+ and
/// w- <= (Bu)-; that test ranges over all of Z^2, not just the box.
GraverEnumeration graver_bruteforce(const GaleConfiguration& b, std::optional<std::int64_t> radius = std::nullopt);

}  // namespace toricsr::oracle
