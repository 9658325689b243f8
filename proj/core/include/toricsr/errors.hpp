#pragma once

#include <stdexcept>
#include <string>

namespace toricsr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The matrix does not have rank n - 2 (or has fewer than three columns).
class RankError : public Error {
 public:
  using Error::Error;
};

/// A Gale vector is zero: the variable occurs in no kernel vector.
class ZeroRowError : public Error {
 public:
  using Error::Error;
};

/// The configuration is not positively graded (ker A meets N^n outside 0).
class GradingError : public Error {
 public:
  using Error::Error;
};

/// A polygon that must be two-dimensional is not.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A value left the range of 64-bit machine integers.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same answer disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace toricsr
