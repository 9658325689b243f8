#include "toricsr/gale.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "toricsr/errors.hpp"
#include "toricsr/exact_linalg.hpp"

namespace toricsr {

GaleConfiguration::GaleConfiguration(std::vector<Vec2> rows, std::optional<IntegerMatrix> source)
    : rows_(std::move(rows)), source_(std::move(source)) {
  if (rows_.empty()) throw std::invalid_argument("Gale configuration has no rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) {
      std::ostringstream msg;
      msg << "Gale vector of variable " << i + 1 << " is zero; the variable occurs in no kernel vector";
      throw ZeroRowError(msg.str());
    }
  }
}

std::vector<std::int64_t> GaleConfiguration::apply(Vec2 u) const {
  std::vector<std::int64_t> v(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) v[i] = dot(rows_[i], u);
  return v;
}

IntegerMatrix GaleConfiguration::matrix() const {
  IntegerMatrix m(rows_.size(), 2);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    m(i, 0) = rows_[i].x;
    m(i, 1) = rows_[i].y;
  }
  return m;
}

namespace {

BigInt dot(const IntegerVector& a, const IntegerVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(IntegerVector& y, const BigInt& k, const IntegerVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * x[i];
}

// floor(num / den + 1/2) for den > 0
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt twice = 2 * num + den;
  BigInt d = 2 * den;
  BigInt q = twice / d;
  if (twice % d != 0 && twice < 0) --q;
  return q;
}

// Lagrange-Gauss reduction of a rank-2 lattice basis.
void lagrange_reduce(IntegerVector& c1, IntegerVector& c2) {
  while (true) {
    if (dot(c1, c1) > dot(c2, c2)) std::swap(c1, c2);
    const BigInt q = round_div(dot(c1, c2), dot(c1, c1));
    if (q == 0) break;
    axpy(c2, -q, c1);
  }
}

void normalize_sign(IntegerVector& v) {
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& x : v) x = -x;
    return;
  }
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("Gale vector entry does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

GaleConfiguration gale_transform(const IntegerMatrix& a) {
  const std::size_t n = a.cols();
  if (n < 3) throw RankError("need at least 3 columns, got " + std::to_string(n));
  const std::size_t r = rank(a);
  if (r + 2 != n) {
    std::ostringstream msg;
    msg << "matrix has rank " << r << " but codimension 2 requires rank " << n - 2;
    throw RankError(msg.str());
  }
  const IntegerMatrix k = kernel_lattice_basis(a);
  IntegerVector c1 = k.column(0);
  IntegerVector c2 = k.column(1);
  lagrange_reduce(c1, c2);
  normalize_sign(c1);
  normalize_sign(c2);
  if (c2 < c1) std::swap(c1, c2);

  std::vector<Vec2> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = {to_int64(c1[i]), to_int64(c2[i])};
  return GaleConfiguration(std::move(rows), a);
}

ReducedGaleConfiguration reduce(const GaleConfiguration& b) {
  ReducedGaleConfiguration g;
  g.rows.reserve(b.size());
  for (Vec2 v : b.rows()) g.rows.push_back(primitive(rotate90(v)));
  g.angular_order.resize(b.size());
  std::iota(g.angular_order.begin(), g.angular_order.end(), std::size_t{0});
  std::stable_sort(g.angular_order.begin(), g.angular_order.end(),
                   [&](std::size_t i, std::size_t j) { return angle_less(g.rows[i], g.rows[j]); });
  return g;
}

std::vector<Vec2> ReducedGaleConfiguration::distinct_directions() const { return distinct_rays(rows); }

std::vector<Vec2> distinct_rays(std::span<const Vec2> vectors) {
  std::vector<Vec2> rays;
  rays.reserve(vectors.size());
  for (Vec2 v : vectors) rays.push_back(primitive(v));
  std::sort(rays.begin(), rays.end(), [](Vec2 a, Vec2 b) {
    if (angle_less(a, b)) return true;
    if (angle_less(b, a)) return false;
    return a < b;
  });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

bool is_positively_graded(std::span<const Vec2> vectors) {
  const std::vector<Vec2> rays = distinct_rays(vectors);
  if (rays.size() < 3) return false;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (det(rays[i], rays[(i + 1) % rays.size()]) <= 0) return false;
  return true;
}

bool is_positively_graded(const GaleConfiguration& b) { return is_positively_graded(b.rows()); }

std::vector<Bouquet> bouquets(std::span<const Vec2> vectors) {
  std::map<Vec2, std::size_t> slot;
  std::vector<Bouquet> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Vec2 line = line_representative(vectors[i]);
    auto [it, inserted] = slot.try_emplace(line, out.size());
    if (inserted) out.push_back(Bouquet{{}, line, false});
    Bouquet& bq = out[it->second];
    bq.members.push_back(i);
    if (!same_ray(vectors[i], vectors[bq.members.front()])) bq.mixed = true;
  }
  return out;
}

std::vector<Bouquet> bouquets(const GaleConfiguration& b) { return bouquets(b.rows()); }

}  // namespace toricsr
