#include "toricsr/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace toricsr {

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
  IntegerVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntegerVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Returns g = gcd(a, b) >= 0 with s*a + t*b = g.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::exchange(r, tmp);
    tmp = old_s - q * cur_s;
    old_s = std::exchange(cur_s, tmp);
    tmp = old_t - q * cur_t;
    old_t = std::exchange(cur_t, tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

// rows (i, j) <- (s*row_i + t*row_j, p*row_i + q*row_j)
void combine_rows(IntegerMatrix& m, std::size_t i, std::size_t j, const BigInt& s, const BigInt& t,
                  const BigInt& p, const BigInt& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt ri = m(i, c);
    BigInt rj = m(j, c);
    m(i, c) = s * ri + t * rj;
    m(j, c) = p * ri + q * rj;
  }
}

void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const BigInt& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += k * m(source, c);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

std::size_t rank(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  std::size_t r = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) swap_rows(m, p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev_pivot;
      m(i, c) = 0;
    }
    prev_pivot = m(r, c);
    ++r;
  }
  return r;
}

BigInt determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  BigInt sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev_pivot;
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

HermiteDecomposition hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        swap_rows(h, r, i);
        swap_rows(u, r, i);
        continue;
      }
      BigInt g, s, t;
      extended_gcd(h(r, c), h(i, c), g, s, t);
      // [[s, t], [-b/g, a/g]] has determinant 1.
      const BigInt p = -h(i, c) / g;
      const BigInt q = h(r, c) / g;
      combine_rows(h, r, i, s, t, p, q);
      combine_rows(u, r, i, s, t, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt k = floor_div(h(i, c), h(r, c));
      if (k == 0) continue;
      add_row_multiple(h, i, r, -k);
      add_row_multiple(u, i, r, -k);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntegerMatrix kernel_lattice_basis(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  const HermiteDecomposition hnf = hermite_normal_form(m.transpose());
  std::size_t nonzero = 0;
  while (nonzero < n) {
    bool zero_row = true;
    for (std::size_t c = 0; c < hnf.h.cols(); ++c)
      if (hnf.h(nonzero, c) != 0) {
        zero_row = false;
        break;
      }
    if (zero_row) break;
    ++nonzero;
  }
  const std::size_t k = n - nonzero;
  if (k == 0) return IntegerMatrix(n, 0);

  IntegerMatrix basis_rows(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c) basis_rows(i, c) = hnf.u(nonzero + i, c);
  return hermite_normal_form(basis_rows).h.transpose();
}

BigInt maximal_minor_gcd(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  if (k > n) throw std::invalid_argument("maximal_minor_gcd: more columns than rows");
  if (k == 0) return 1;
  BigInt g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    IntegerMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(pick[i], j);
    g = boost::multiprecision::gcd(g, determinant(sub));
    if (g == 1) return g;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

}  // namespace toricsr
