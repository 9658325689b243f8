#include <random>

#include <gtest/gtest.h>

#include "support/instances.hpp"
#include "toricsr/errors.hpp"
#include "toricsr/exact_linalg.hpp"
#include "toricsr/gale.hpp"

namespace toricsr {
namespace {

// Enumeration oracle for positive grading: look for alpha != 0 in a box
// with B alpha >= 0.
bool graded_by_enumeration(const std::vector<Vec2>& rows, std::int64_t box) {
  for (std::int64_t x = -box; x <= box; ++x)
    for (std::int64_t y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      bool nonnegative = true;
      for (Vec2 b : rows) nonnegative = nonnegative && dot(b, {x, y}) >= 0;
      if (nonnegative) return false;
    }
  return true;
}

std::vector<Vec2> random_rows(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  std::vector<Vec2> rows;
  while (rows.size() < n) {
    const Vec2 v{e(rng), e(rng)};
    if (!v.is_zero()) rows.push_back(v);
  }
  return rows;
}

TEST(GaleTransform, ExampleReproducesPublishedBasis) {
  const GaleConfiguration b = gale_transform(testing::example_matrix());
  EXPECT_EQ(b.rows(), testing::example_gale().rows());
  ASSERT_TRUE(b.source().has_value());
  EXPECT_TRUE((testing::example_matrix() * b.matrix()).is_zero());
}

TEST(GaleTransform, TwoDisjointEdges) {
  const IntegerMatrix a{{1, 1, 0, 0}, {0, 0, 1, 1}};
  const GaleConfiguration b = gale_transform(a);
  EXPECT_TRUE((a * b.matrix()).is_zero());
  EXPECT_EQ(maximal_minor_gcd(b.matrix()), 1);
  EXPECT_EQ(b.rows(), (std::vector<Vec2>{{0, 1}, {0, -1}, {1, 0}, {-1, 0}}));
}

TEST(GaleTransform, RejectsWrongRank) {
  EXPECT_THROW(gale_transform(IntegerMatrix::identity(3)), RankError);
  EXPECT_THROW(gale_transform(IntegerMatrix{{1, 1}}), RankError);
  EXPECT_THROW(gale_transform(IntegerMatrix{{1, 2, 3, 4}, {2, 4, 6, 8}}), RankError);
}

TEST(GaleTransform, RejectsVariableOutsideEveryKernelVector) {
  EXPECT_THROW(gale_transform(IntegerMatrix{{1, 0, 0, 0}, {0, 1, 1, 1}}), ZeroRowError);
}

TEST(GaleTransform, IsSaturatedKernelBasisOnRandomInput) {
  for (const auto& inst : testing::random_suite(40, 5)) {
    EXPECT_TRUE((inst.a * inst.gale.matrix()).is_zero());
    EXPECT_EQ(maximal_minor_gcd(inst.gale.matrix()), 1);
  }
}

TEST(Reduce, ExampleMatchesPublishedReducedDiagram) {
  const ReducedGaleConfiguration g = reduce(testing::example_gale());
  EXPECT_EQ(g.rows, testing::example_reduced_rows());
  EXPECT_EQ(g.angular_order, (std::vector<std::size_t>{3, 4, 5, 0, 1, 2}));
}

TEST(Reduce, ScalesByContent) {
  const ReducedGaleConfiguration g = reduce(GaleConfiguration({{2, 0}, {2, 0}, {2, 0}}));
  EXPECT_EQ(g.rows, (std::vector<Vec2>{{0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(g.angular_order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(reduce(GaleConfiguration({{0, -1}})).rows.front(), (Vec2{1, 0}));
}

TEST(Reduce, PrimitiveRowsAreOnlyRotated) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vec2> rows = random_rows(rng, 5, 30);
    for (Vec2& v : rows) v = primitive(v);
    const ReducedGaleConfiguration once = reduce(GaleConfiguration(rows));
    const ReducedGaleConfiguration twice = reduce(GaleConfiguration(once.rows));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(once.rows[i], rotate90(rows[i]));
      EXPECT_EQ(twice.rows[i], -rows[i]);
    }
  }
}

TEST(Reduce, AngularOrderStartsAtAngleZeroAndBreaksTiesByIndex) {
  const ReducedGaleConfiguration g = reduce(GaleConfiguration({{1, 0}, {0, 3}, {-1, 0}, {0, -1}, {0, 1}}));
  // reduced rows: (0,1), (-1,0), (0,-1), (1,0), (-1,0)
  EXPECT_EQ(g.angular_order, (std::vector<std::size_t>{3, 0, 1, 4, 2}));
}

TEST(PositiveGrading, Examples) {
  EXPECT_TRUE(is_positively_graded(testing::example_gale()));
  EXPECT_FALSE(is_positively_graded(GaleConfiguration({{1, 0}, {0, 1}})));
  EXPECT_FALSE(is_positively_graded(GaleConfiguration({{1, 0}, {-1, 0}, {0, 1}})));
  EXPECT_FALSE(is_positively_graded(GaleConfiguration({{1, 2}, {2, 4}, {-3, -6}})));
  EXPECT_TRUE(is_positively_graded(GaleConfiguration({{1, 0}, {0, 1}, {-1, -1}})));
}

TEST(PositiveGrading, AgreesWithBoxEnumeration) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const std::vector<Vec2> rows = random_rows(rng, 3 + trial % 4, 5);
    EXPECT_EQ(is_positively_graded(rows), graded_by_enumeration(rows, 20)) << "trial " << trial;
  }
}

TEST(PositiveGrading, ConsecutiveReducedConesAreStrictlyConvex) {
  for (const auto& inst : testing::random_suite(30, 9)) {
    const std::vector<Vec2> rays = reduce(inst.gale).distinct_directions();
    for (std::size_t i = 0; i < rays.size(); ++i) EXPECT_GT(det(rays[i], rays[(i + 1) % rays.size()]), 0);
  }
}

TEST(Bouquets, Example) {
  const std::vector<Bouquet> bq = bouquets(testing::example_gale());
  ASSERT_EQ(bq.size(), 4u);
  EXPECT_EQ(bq[0], (Bouquet{{0, 2}, {1, 2}, true}));
  EXPECT_EQ(bq[1], (Bouquet{{1, 4}, {2, -1}, true}));
  EXPECT_EQ(bq[2], (Bouquet{{3}, {0, 1}, false}));
  EXPECT_EQ(bq[3], (Bouquet{{5}, {1, 0}, false}));
}

TEST(Bouquets, LawrenceTypeAndSingleRay) {
  const auto lawrence = bouquets(GaleConfiguration({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  ASSERT_EQ(lawrence.size(), 2u);
  EXPECT_TRUE(lawrence[0].mixed);
  EXPECT_TRUE(lawrence[1].mixed);

  const auto ray = bouquets(GaleConfiguration({{1, 2}, {1, 2}, {2, 4}}));
  ASSERT_EQ(ray.size(), 1u);
  EXPECT_FALSE(ray[0].mixed);
  EXPECT_EQ(ray[0].members, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Bouquets, RotationPreservesPartition) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const GaleConfiguration b(random_rows(rng, 6, 3));
    const auto from_b = bouquets(b);
    const auto from_reduced = bouquets(reduce(b).rows);
    ASSERT_EQ(from_b.size(), from_reduced.size());
    for (std::size_t i = 0; i < from_b.size(); ++i) {
      EXPECT_EQ(from_b[i].members, from_reduced[i].members);
      EXPECT_EQ(from_b[i].mixed, from_reduced[i].mixed);
    }
  }
}

TEST(GaleConfiguration, RejectsZeroRow) {
  EXPECT_THROW(GaleConfiguration({{1, 0}, {0, 0}, {0, 1}}), ZeroRowError);
}

}  // namespace
}  // namespace toricsr
