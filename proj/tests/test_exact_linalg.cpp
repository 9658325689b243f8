#include <random>

#include <gtest/gtest.h>

#include "support/instances.hpp"
#include "toricsr/exact_linalg.hpp"

namespace toricsr {
namespace {

// Test-side oracle: is v an integer combination of the columns of a
// full-column-rank n x 2 matrix? Solved by Cramer's rule on a nonsingular
// 2x2 row pair, then checked on every row.
bool in_column_lattice(const IntegerMatrix& k, const IntegerVector& v) {
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = i + 1; j < k.rows(); ++j) {
      const BigInt d = k(i, 0) * k(j, 1) - k(i, 1) * k(j, 0);
      if (d == 0) continue;
      const BigInt x_num = v[i] * k(j, 1) - v[j] * k(i, 1);
      const BigInt y_num = k(i, 0) * v[j] - k(j, 0) * v[i];
      if (x_num % d != 0 || y_num % d != 0) return false;
      const BigInt x = x_num / d, y = y_num / d;
      for (std::size_t r = 0; r < k.rows(); ++r)
        if (k(r, 0) * x + k(r, 1) * y != v[r]) return false;
      return true;
    }
  return false;
}

bool same_column_lattice(const IntegerMatrix& p, const IntegerMatrix& q) {
  for (std::size_t c = 0; c < q.cols(); ++c)
    if (!in_column_lattice(p, q.column(c))) return false;
  for (std::size_t c = 0; c < p.cols(); ++c)
    if (!in_column_lattice(q, p.column(c))) return false;
  return true;
}

void expect_row_hermite_form(const IntegerMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    ASSERT_FALSE(seen_zero_row) << "nonzero row " << r << " after a zero row";
    if (r > 0) EXPECT_GT(c, last_pivot_col);
    EXPECT_GT(h(r, c), 0);
    for (std::size_t above = 0; above < r; ++above) {
      EXPECT_GE(h(above, c), 0);
      EXPECT_LT(h(above, c), h(r, c));
    }
    last_pivot_col = c;
  }
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = e(rng);
  return m;
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntegerMatrix::identity(2)), 2u);
  EXPECT_EQ(rank(testing::example_matrix()), 4u);
  EXPECT_EQ(rank(IntegerMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(IntegerMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), 2u);
}

TEST(Rank, MatchesDeterminantOnSquareMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntegerMatrix m = random_matrix(rng, 4, 4, 2);
    EXPECT_EQ(rank(m) == 4, determinant(m) != 0);
  }
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(IntegerMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntegerMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
  EXPECT_THROW(determinant(IntegerMatrix{{1, 2}}), std::invalid_argument);
}

TEST(HermiteNormalForm, SingleColumnGcd) {
  const IntegerMatrix m{{2}, {4}};
  const auto [h, u] = hermite_normal_form(m);
  EXPECT_EQ(h, (IntegerMatrix{{2}, {0}}));
  EXPECT_EQ(u * m, h);
  EXPECT_EQ(abs(determinant(u)), 1);
}

TEST(HermiteNormalForm, Identity) {
  const auto [h, u] = hermite_normal_form(IntegerMatrix::identity(2));
  EXPECT_EQ(h, IntegerMatrix::identity(2));
  EXPECT_EQ(u, IntegerMatrix::identity(2));
}

TEST(HermiteNormalForm, TallMatrixHasTwoNonzeroRows) {
  const IntegerMatrix m = IntegerMatrix{{3, 2, 1, 0}, {0, 1, 2, 3}}.transpose();
  const auto [h, u] = hermite_normal_form(m);
  EXPECT_EQ(u * m, h);
  EXPECT_EQ(abs(determinant(u)), 1);
  expect_row_hermite_form(h);
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (h(r, 0) != 0 || h(r, 1) != 0) ++nonzero;
  EXPECT_EQ(nonzero, 2u);
}

TEST(HermiteNormalForm, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const IntegerMatrix m = random_matrix(rng, rows, cols, 9);
    const auto [h, u] = hermite_normal_form(m);
    ASSERT_EQ(u * m, h);
    ASSERT_EQ(abs(determinant(u)), 1);
    expect_row_hermite_form(h);
  }
}

TEST(HermiteNormalForm, LargeEntriesStayExact) {
  const IntegerMatrix m = IntegerMatrix::from_rows({
      {BigInt("123456789012345678901234567890"), BigInt(7)},
      {BigInt("987654321098765432109876543210"), BigInt(-3)},
  });
  const auto [h, u] = hermite_normal_form(m);
  EXPECT_EQ(u * m, h);
  EXPECT_EQ(abs(determinant(u)), 1);
  expect_row_hermite_form(h);
}

TEST(KernelLatticeBasis, CoordinateProjection) {
  const IntegerMatrix k = kernel_lattice_basis(IntegerMatrix{{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(k, (IntegerMatrix{{0}, {0}, {1}}));
}

TEST(KernelLatticeBasis, ExampleMatrixMatchesPublishedGaleTransform) {
  const IntegerMatrix a = testing::example_matrix();
  const IntegerMatrix k = kernel_lattice_basis(a);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_TRUE((a * k).is_zero());
  const IntegerMatrix published{{1, 2}, {-2, 1}, {-1, -2}, {0, -1}, {2, -1}, {2, 0}};
  EXPECT_TRUE(same_column_lattice(k, published));
}

TEST(KernelLatticeBasis, TwistedCubic) {
  const IntegerMatrix m = testing::twisted_cubic();
  const IntegerMatrix k = kernel_lattice_basis(m);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_EQ(maximal_minor_gcd(k), 1);
  EXPECT_TRUE(same_column_lattice(k, IntegerMatrix{{1, 0}, {-2, 1}, {1, -2}, {0, 1}}));
}

TEST(KernelLatticeBasis, FullColumnRankGivesNoColumns) {
  const IntegerMatrix k = kernel_lattice_basis(IntegerMatrix::identity(3));
  EXPECT_EQ(k.rows(), 3u);
  EXPECT_EQ(k.cols(), 0u);
}

TEST(KernelLatticeBasis, SaturatedWhereRationalKernelIsNot) {
  // The rational kernel is spanned by (2, -1, 0) and (0, 0, 1); (1, ...) never appears.
  const IntegerMatrix m{{2, 4, 0}};
  const IntegerMatrix k = kernel_lattice_basis(m);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_EQ(maximal_minor_gcd(k), 1);
  EXPECT_TRUE(same_column_lattice(k, IntegerMatrix{{2, 0}, {-1, 0}, {0, 1}}));
}

TEST(KernelLatticeBasis, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t cols = 2 + rng() % 6;
    const std::size_t rows = 1 + rng() % cols;
    const IntegerMatrix m = random_matrix(rng, rows, cols, 5);
    const IntegerMatrix k = kernel_lattice_basis(m);
    ASSERT_EQ(k.cols(), cols - rank(m));
    ASSERT_TRUE((m * k).is_zero());
    ASSERT_EQ(maximal_minor_gcd(k), 1) << m;
    // Canonical: recomputing from a different presentation of the same matrix gives the same basis.
    const IntegerMatrix doubled_rows = IntegerMatrix::from_rows([&] {
      std::vector<IntegerVector> r;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        IntegerVector row = m.row(i);
        for (auto& x : row) x *= 3;
        r.push_back(row);
      }
      return r;
    }());
    ASSERT_EQ(kernel_lattice_basis(doubled_rows), k);
  }
}

}  // namespace
}  // namespace toricsr
