#pragma once

// Sparse exact linear algebra over Q: incremental row echelon form, rank,
// kernels, and coordinates of polynomials in a degree basis.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "moduli/exact_series.hpp"
#include "moduli/graded_algebra.hpp"

namespace moduli {

/// Sorted by index; no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// v + c * w
SparseVector axpy(const SparseVector& v, const Rational& c, const SparseVector& w);

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> row_data;  // size rows

  Rational at(std::size_t r, std::size_t c) const;
  std::vector<std::vector<Rational>> dense() const;
};

/// Row space in echelon form. Pivoting is by position: every stored row has
/// a leading 1 in its pivot column, and rows are reduced left to right.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Adds a row; returns false if it was already in the span.
  bool insert(SparseVector row);
  bool contains(const SparseVector& row) const;

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Fully reduced rows, ordered by pivot column.
  std::vector<SparseVector> reduced_rows() const;
  /// Basis of {x : R x = 0}, one vector per free column (ascending), with a 1
  /// in that column.
  std::vector<SparseVector> nullspace() const;

 private:
  SparseVector reduce(SparseVector row) const;

  std::size_t cols_;
  std::map<std::size_t, SparseVector> pivots_;
};

RowEchelon echelon_of(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

SparseVector to_coordinates(const DegreeBasis& basis, const GradedPolynomial& p);
GradedPolynomial from_coordinates(const GeneratorSetPtr& gens, const DegreeBasis& basis,
                                  const SparseVector& v);

}  // namespace moduli
