#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricsr {

using BigInt = boost::multiprecision::cpp_int;
using IntegerVector = std::vector<BigInt>;

/// Dense matrix of unbounded integers, stored row-major.
///
/// A matrix with zero columns is allowed so that the kernel of a
/// full-column-rank matrix has a representation; parsed input always has
/// at least one row and one column.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  /// Throws std::invalid_argument when rows are ragged.
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows);
  static IntegerMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] IntegerVector row(std::size_t r) const;
  [[nodiscard]] IntegerVector column(std::size_t c) const;
  [[nodiscard]] IntegerMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Throws std::invalid_argument on a dimension mismatch.
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

}  // namespace toricsr
