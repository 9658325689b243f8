#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toricsr/errors.hpp"
#include "toricsr/exact_linalg.hpp"
#include "toricsr/gale.hpp"
#include "toricsr/integer_matrix.hpp"
#include "toricsr/toric.hpp"

namespace toricsr::testing {

// The worked 4x6 example whose Gale diagram has six rays and a symmetric hull.
inline IntegerMatrix example_matrix() {
  return {{1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 1}, {-2, 0, 0, 0, -4, 5}};
}

inline GaleConfiguration example_gale() {
  return GaleConfiguration({{1, 2}, {-2, 1}, {-1, -2}, {0, -1}, {2, -1}, {2, 0}});
}

inline std::vector<Vec2> example_reduced_rows() { return {{-2, 1}, {-1, -2}, {2, -1}, {1, 0}, {1, 2}, {0, 1}}; }

// Exponent pairs of the six minimal generators, in ascending canonical order.
inline std::vector<std::pair<ExponentVector, ExponentVector>> example_generators() {
  return {
      {{0, 5, 0, 0, 0, 0}, {0, 0, 0, 1, 5, 4}},  // b^5 - d e^5 f^4
      {{1, 0, 0, 0, 2, 2}, {0, 2, 1, 0, 0, 0}},  // a e^2 f^2 - b^2 c
      {{1, 3, 0, 0, 0, 0}, {0, 0, 1, 1, 3, 2}},  // a b^3 - c d e^3 f^2
      {{2, 1, 0, 0, 0, 0}, {0, 0, 2, 1, 1, 0}},  // a^2 b - c^2 d e
      {{3, 0, 0, 0, 1, 2}, {0, 1, 3, 1, 0, 0}},  // a^3 e f^2 - b c^3 d
      {{5, 0, 0, 0, 0, 2}, {0, 0, 5, 2, 0, 0}},  // a^5 f^2 - c^5 d^2
  };
}

inline IntegerMatrix twisted_cubic() { return {{3, 2, 1, 0}, {0, 1, 2, 3}}; }

struct SuiteInstance {
  IntegerMatrix a;
  GaleConfiguration gale;
};

// Random (n-2) x n matrices with n in [4, 7] and entries in [-4, 4], kept
// when they have rank n-2, no zero Gale row, and are positively graded.
inline std::vector<SuiteInstance> random_suite(std::size_t count, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> cols(4, 7);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::vector<SuiteInstance> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(cols(rng));
    IntegerMatrix a(n - 2, n);
    for (std::size_t r = 0; r < n - 2; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
    if (rank(a) != n - 2) continue;
    try {
      GaleConfiguration g = gale_transform(a);
      if (!is_positively_graded(g)) continue;
      out.push_back({std::move(a), std::move(g)});
    } catch (const ZeroRowError&) {
      continue;
    }
  }
  return out;
}

}  // namespace toricsr::testing
