#include "toricsr/toric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "toricsr/errors.hpp"
#include "toricsr/geometry.hpp"
#include "toricsr/oracle.hpp"

namespace toricsr {

Binomial Binomial::from_kernel_vector(std::span<const std::int64_t> v) {
  ExponentVector plus(v.size()), minus(v.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) plus[i] = v[i];
    if (v[i] < 0) minus[i] = checked::neg(v[i]);
    nonzero = nonzero || v[i] != 0;
  }
  if (!nonzero) throw std::invalid_argument("binomial of the zero vector");
  if (plus < minus) std::swap(plus, minus);
  return Binomial(std::move(plus), std::move(minus));
}

ExponentVector Binomial::kernel_vector() const {
  ExponentVector v(plus_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked::sub(plus_[i], minus_[i]);
  return v;
}

namespace {

std::string variable_name(std::size_t i, std::size_t n, VariableStyle style) {
  if (style == VariableStyle::letters && n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

std::string monomial(const ExponentVector& e, VariableStyle style) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, e.size(), style);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

BinomialSet binomials_of(const GaleConfiguration& b, std::span<const Vec2> points) {
  BinomialSet out;
  for (Vec2 u : points) out.insert(binomial_from_gale(b, u));
  return out;
}

void require_positively_graded(const GaleConfiguration& b) {
  if (!is_positively_graded(b))
    throw GradingError("ker A meets the nonnegative orthant outside 0; the toric ideal is not positively graded");
}

std::vector<Vec2> with_negatives(std::span<const Vec2> v) {
  std::vector<Vec2> out(v.begin(), v.end());
  for (Vec2 x : v) out.push_back(-x);
  return out;
}

BinomialSet graver_from_reduced(const GaleConfiguration& b, const ReducedGaleConfiguration& g) {
  return binomials_of(b, fan_hilbert_union(with_negatives(g.rows)).vectors);
}

// Breadth-first search from plus to minus inside F(plus), using the moves.
bool connected_in_fiber(const GaleConfiguration& b, const Binomial& target, const std::vector<ExponentVector>& moves) {
  const oracle::FiberEnumeration fiber = oracle::enumerate_fiber(b, target.plus());
  std::map<ExponentVector, bool> visited;
  for (const auto& p : fiber.points) visited.emplace(p, false);
  std::deque<ExponentVector> queue{target.plus()};
  visited[target.plus()] = true;
  ExponentVector next(target.size());
  while (!queue.empty()) {
    const ExponentVector w = std::move(queue.front());
    queue.pop_front();
    if (w == target.minus()) return true;
    for (const ExponentVector& d : moves)
      for (int sign : {1, -1}) {
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = checked::add(w[i], sign * d[i]);
        auto it = visited.find(next);
        if (it == visited.end() || it->second) continue;
        it->second = true;
        queue.push_back(next);
      }
  }
  return false;
}

MarkovBasis markov_from(const GaleConfiguration& b, const BinomialSet& indispensable, const BinomialSet& graver) {
  MarkovBasis m;
  m.binomials = indispensable;
  if (indispensable.empty()) {
    m.complete_intersection = true;
    return m;
  }
  std::vector<ExponentVector> moves;
  for (const Binomial& x : indispensable) moves.push_back(x.kernel_vector());
  m.verified_generating = std::all_of(graver.begin(), graver.end(), [&](const Binomial& g) {
    return indispensable.contains(g) || connected_in_fiber(b, g, moves);
  });
  m.complete_intersection = !m.verified_generating;
  return m;
}

}  // namespace

std::string to_string(const Binomial& b, VariableStyle style) {
  return monomial(b.plus(), style) + " - " + monomial(b.minus(), style);
}

Binomial binomial_from_gale(const GaleConfiguration& b, Vec2 u) {
  if (u.is_zero()) throw std::invalid_argument("binomial_from_gale: u must be nonzero");
  return Binomial::from_kernel_vector(b.apply(u));
}

BinomialSet indispensable_set(const GaleConfiguration& b) {
  require_positively_graded(b);
  return binomials_of(b, symmetric_core(fan_hilbert_union(reduce(b))));
}

BinomialSet indispensable_set(const IntegerMatrix& a) { return indispensable_set(gale_transform(a)); }

BinomialSet graver_basis(const GaleConfiguration& b) {
  require_positively_graded(b);
  return graver_from_reduced(b, reduce(b));
}

BinomialSet graver_basis(const IntegerMatrix& a) { return graver_basis(gale_transform(a)); }

MarkovBasis markov_basis(const GaleConfiguration& b) {
  return markov_from(b, indispensable_set(b), graver_basis(b));
}

MarkovBasis markov_basis(const IntegerMatrix& a) { return markov_basis(gale_transform(a)); }

LawrenceMatrix lawrence_lifting(const IntegerMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix lifted(d + n, 2 * n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c) lifted(r, c) = a(r, c);
  for (std::size_t i = 0; i < n; ++i) {
    lifted(d + i, i) = 1;
    lifted(d + i, n + i) = 1;
  }
  return {a, std::move(lifted)};
}

Binomial project_lawrence(const Binomial& lifted) {
  if (lifted.size() % 2 != 0) throw std::invalid_argument("project_lawrence: odd number of variables");
  const std::size_t n = lifted.size() / 2;
  ExponentVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = checked::sub(lifted.plus()[i], lifted.minus()[i]);
  return Binomial::from_kernel_vector(v);
}

bool centrally_symmetric_hull(const ReducedGaleConfiguration& g) {
  const std::vector<Vec2> hull = convex_hull(g.rows);
  if (hull.size() < 3) throw DegenerateError("conv of the reduced Gale vectors is not two-dimensional");
  return std::all_of(hull.begin(), hull.end(),
                     [&](Vec2 v) { return std::find(hull.begin(), hull.end(), -v) != hull.end(); });
}

RobustnessReport is_strongly_robust(const GaleConfiguration& b) {
  require_positively_graded(b);
  ReducedGaleConfiguration reduced = reduce(b);
  HilbertBasisSet h_union = fan_hilbert_union(reduced);
  std::vector<Vec2> h_core = symmetric_core(h_union);
  BinomialSet indispensable = binomials_of(b, h_core);
  BinomialSet graver = graver_from_reduced(b, reduced);
  MarkovBasis markov = markov_from(b, indispensable, graver);
  std::vector<Bouquet> bqs = bouquets(b);
  const auto mixed = static_cast<std::size_t>(std::count_if(bqs.begin(), bqs.end(), [](const Bouquet& q) { return q.mixed; }));
  const bool symmetric = centrally_symmetric_hull(reduced);

  std::optional<Witness> witness;
  for (std::size_t i = 0; i < reduced.rows.size() && !witness; ++i) {
    const Vec2 opposite = -reduced.rows[i];
    if (std::find(h_core.begin(), h_core.end(), opposite) == h_core.end()) witness = Witness{i, reduced.rows[i]};
  }
  const bool by_directions = !witness.has_value();
  const bool by_sets = indispensable == graver;
  if (by_directions != by_sets) {
    std::ostringstream msg;
    msg << "strong robustness criteria disagree: opposite-direction test says " << by_directions
        << ", indispensable == graver says " << by_sets;
    throw ConsistencyError(msg.str());
  }

  const bool ci = markov.complete_intersection;
  return RobustnessReport{
      .gale = b,
      .reduced = std::move(reduced),
      .h_union = std::move(h_union),
      .h_core = std::move(h_core),
      .graver = std::move(graver),
      .indispensable = std::move(indispensable),
      .markov = std::move(markov),
      .bouquets = std::move(bqs),
      .mixed_count = mixed,
      .centrally_symmetric = symmetric,
      .complete_intersection = ci,
      .strongly_robust = by_directions,
      .witness = witness,
  };
}

RobustnessReport is_strongly_robust(const IntegerMatrix& a) { return is_strongly_robust(gale_transform(a)); }

}  // namespace toricsr
