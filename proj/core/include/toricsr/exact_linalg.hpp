#pragma once

#include <cstddef>

#include "toricsr/integer_matrix.hpp"

namespace toricsr {

/// Rank over Q, by fraction-free elimination.
std::size_t rank(const IntegerMatrix& m);

/// Determinant of a square matrix (Bareiss). Throws std::invalid_argument if not square.
BigInt determinant(const IntegerMatrix& m);

struct HermiteDecomposition {
  IntegerMatrix h;  ///< row-style Hermite normal form of the input
  IntegerMatrix u;  ///< unimodular transform with u * input == h
};

/// Row-style Hermite normal form: echelon, pivots positive, entries above a
/// pivot reduced into [0, pivot), zero rows last.
HermiteDecomposition hermite_normal_form(const IntegerMatrix& m);

/// Basis of the saturated lattice {v in Z^n : m v = 0}, one vector per column.
///
/// The basis is read off the unimodular transform of the Hermite form of
/// m^T, so no separate saturation step is needed. The result is returned in
/// column-style Hermite normal form, which makes it unique.
IntegerMatrix kernel_lattice_basis(const IntegerMatrix& m);

/// gcd of all maximal minors of a matrix with at least as many rows as columns.
/// Equals 1 exactly when the column lattice is saturated.
BigInt maximal_minor_gcd(const IntegerMatrix& m);

}  // namespace toricsr
