#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "toricsr/gale.hpp"
#include "toricsr/hilbert2d.hpp"
#include "toricsr/integer_matrix.hpp"

namespace toricsr {

using ExponentVector = std::vector<std::int64_t>;

/// The binomial p^plus - p^minus, stored with disjoint supports and with
/// plus lexicographically greater than minus, so that b and -b share one
/// representative.
class Binomial {
 public:
  /// Canonical binomial of a nonzero kernel vector v = plus - minus.
  /// Throws std::invalid_argument if v is zero.
  static Binomial from_kernel_vector(std::span<const std::int64_t> v);

  [[nodiscard]] const ExponentVector& plus() const { return plus_; }
  [[nodiscard]] const ExponentVector& minus() const { return minus_; }
  [[nodiscard]] std::size_t size() const { return plus_.size(); }
  /// plus - minus
  [[nodiscard]] ExponentVector kernel_vector() const;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;

 private:
  Binomial(ExponentVector plus, ExponentVector minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

  ExponentVector plus_;
  ExponentVector minus_;
};

using BinomialSet = std::set<Binomial>;

enum class VariableStyle {
  indexed,  ///< x1, x2, ...
  letters,  ///< a, b, ... (falls back to indexed when n > 26)
};

/// "a^3*e*f^2 - b*c^3*d"; an empty monomial renders as "1".
std::string to_string(const Binomial& b, VariableStyle style = VariableStyle::indexed);

/// Binomial of the kernel vector B u. Throws std::invalid_argument if u = 0.
Binomial binomial_from_gale(const GaleConfiguration& b, Vec2 u);

/// Binomials of the points of H_A (one per +/- pair). These are exactly the
/// indispensable binomials.
BinomialSet indispensable_set(const IntegerMatrix& a);
BinomialSet indispensable_set(const GaleConfiguration& b);

/// Primitive binomials.
///
/// The sign pattern of B u changes only on the lines spanned by the reduced
/// Gale vectors, so the primitive kernel vectors are the Hilbert basis
/// elements of the fan whose rays are +b~_i and -b~_i. That fan is the
/// reduced Gale fan of the Lawrence lifting.
BinomialSet graver_basis(const IntegerMatrix& a);
BinomialSet graver_basis(const GaleConfiguration& b);

struct MarkovBasis {
  BinomialSet binomials;
  /// H_A is empty, or the indispensables were found not to generate.
  bool complete_intersection = false;
  /// Every primitive move was verified to be a path of moves from binomials.
  bool verified_generating = false;
};

/// Indispensable binomials as a Markov basis. Generation is checked by
/// connecting the two monomials of every primitive binomial inside their
/// fiber using the returned moves.
MarkovBasis markov_basis(const IntegerMatrix& a);
MarkovBasis markov_basis(const GaleConfiguration& b);

struct LawrenceMatrix {
  IntegerMatrix base;
  IntegerMatrix lifted;  ///< [A 0; I I], (d + n) x 2n
};

LawrenceMatrix lawrence_lifting(const IntegerMatrix& a);

/// Maps a binomial p^u q^v - p^v q^u of the Lawrence lifting to p^u - p^v.
Binomial project_lawrence(const Binomial& lifted);

/// Whether the vertex set of conv(b~_1, ..., b~_n) is invariant under
/// negation. Throws DegenerateError if the hull is not two-dimensional.
bool centrally_symmetric_hull(const ReducedGaleConfiguration& g);

struct Witness {
  std::size_t variable;  ///< 0-based
  Vec2 direction;        ///< b~_variable, with -b~_variable not in H_A
};

struct RobustnessReport {
  GaleConfiguration gale;
  ReducedGaleConfiguration reduced;
  HilbertBasisSet h_union;
  std::vector<Vec2> h_core;
  BinomialSet graver;
  BinomialSet indispensable;
  MarkovBasis markov;
  std::vector<Bouquet> bouquets;
  std::size_t mixed_count = 0;
  bool centrally_symmetric = false;
  bool complete_intersection = false;
  bool strongly_robust = false;
  std::optional<Witness> witness;
};

/// Decides strong robustness by checking -b~_i in H_A for every i, and
/// cross-checks the verdict against indispensable == graver.
///
/// Throws RankError, ZeroRowError or GradingError on invalid input and
/// ConsistencyError if the two criteria disagree.
RobustnessReport is_strongly_robust(const IntegerMatrix& a);
RobustnessReport is_strongly_robust(const GaleConfiguration& b);

}  // namespace toricsr
