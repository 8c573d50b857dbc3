#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lefschetz/poly.hpp"
#include "lefschetz/scalar.hpp"

namespace lefschetz {

/// Dense row-major matrix over Q.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarMatrix transposed() const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const Rational& c) const;
  bool is_zero() const;
  bool operator==(const ScalarMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Vertical concatenation; all blocks must share a column count.
ScalarMatrix stack_rows(const std::vector<const ScalarMatrix*>& blocks, std::size_t cols);
/// Horizontal concatenation; all blocks must share a row count.
ScalarMatrix stack_cols(const std::vector<const ScalarMatrix*>& blocks, std::size_t rows);

/// Rank by fraction-free (Bareiss) elimination over Z after clearing row
/// denominators, or by Gaussian elimination in F_p.
std::size_t matrix_rank(const ScalarMatrix& m, const Field& field = Field::rationals());

/// Exact determinant of a square matrix (fraction-free over Z).
Rational determinant(const ScalarMatrix& m);

/// Dimension of the kernel of m acting on column vectors.
inline std::size_t nullity(const ScalarMatrix& m) { return m.cols() - matrix_rank(m); }

/// Sparse vector: sorted (index, value) pairs, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incrementally built echelon basis of a subspace of Q^n. Each stored row
/// is pivoted on its highest nonzero index, so reduce() yields the unique
/// representative of a vector modulo the span supported on non-pivot indices.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim) : dim_(dim) {}

  /// Adds v to the span; returns false when v was already dependent.
  bool insert(SparseVector v);
  SparseVector reduce(SparseVector v) const;

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t index) const { return rows_.count(index) != 0; }

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector> rows_;  // pivot -> row with that lead (pivot coefficient 1)
};

/// Matrix of polynomials over a common ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int nvars() const { return nvars_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix transposed() const;
  bool is_zero() const;
  ScalarMatrix evaluate(std::span<const Rational> point) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  int nvars_ = 0;
  std::vector<Poly> data_;
};

/// Exact determinant: cofactor expansion below size 5, fraction-free
/// Bareiss elimination with exact polynomial division from size 5 on.
Poly poly_determinant(const PolyMatrix& m);

}  // namespace lefschetz
