#pragma once

// Exact linear algebra over Z and Q on Eigen matrices of big integers.

#include "zhuc2/scalar.hpp"

#include <vector>

namespace zhuc2 {

/// Determinant by Bareiss fraction-free elimination.
Integer determinant(IntMatrix a);

/// Rank by Bareiss fraction-free elimination (any shape).
Eigen::Index bareiss_rank(IntMatrix a);

/// Solve a x = b for square nonsingular a, exactly.
RatVector solve(const IntMatrix& a, const IntVector& b);

/// Row-style Hermite normal form: nonzero rows of the result form a basis
/// of the Z-span of the rows of `gens`, in echelon form with positive pivots
/// and entries above each pivot reduced into [0, pivot).
IntMatrix row_hermite_form(IntMatrix gens);

/// x^T G x = sum_i diag[i] * (x_i + sum_{j>i} upper(i, j) x_j)^2.
struct SymmetricDecomposition {
  RatVector diag;
  RatMatrix upper;  // unit upper triangular
};

/// LDL-style decomposition of a symmetric matrix. Fails (returns the index
/// of the first non-positive pivot) if the matrix is not positive definite.
struct DecompositionResult {
  SymmetricDecomposition decomposition;
  Eigen::Index failed_pivot = -1;
};
DecompositionResult decompose_symmetric(const IntMatrix& gram);

/// Incremental row echelon basis over Z with content removal after every
/// combination. Rows are dense integer vectors of a fixed width.
class EchelonBasis {
 public:
  using Row = std::vector<Integer>;

  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Reduces `row` against the basis; keeps it if independent. Returns
  /// whether the rank grew.
  bool insert(Row row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  bool full() const { return rows_.size() == width_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index, or -1
};

}  // namespace zhuc2
