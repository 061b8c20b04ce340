#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stiefel/polynomial.hpp"
#include "stiefel/rational.hpp"

namespace stiefel {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;
  Rational trace() const;

  /// this * v
  std::vector<Rational> apply(std::span<const Rational> v) const;
  /// this^T * v
  std::vector<Rational> apply_transpose(std::span<const Rational> v) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational determinant(const RationalMatrix& m);

/// Sign of the determinant in {-1, 0, +1}; no floating point involved.
int rational_matrix_det_sign(const RationalMatrix& m);

/// rows x cols grid of polynomials over one ring; column j is the j-th frame vector.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, Variables vars);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> row_major);

  /// Builds a matrix from its columns (each of equal length).
  static PolyMatrix from_columns(const std::vector<std::vector<Polynomial>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Variables& variables() const noexcept { return vars_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  RationalMatrix evaluate(std::span<const Rational> point) const;
  std::vector<double> evaluate(std::span<const double> point) const;  // row-major

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Variables vars_;
  std::vector<Polynomial> entries_;
};

/// Determinant of a square polynomial matrix (cofactor expansion with memoised minors).
Polynomial determinant(const PolyMatrix& m);

/// All cols x cols minors, row subsets in increasing lexicographic order.
std::vector<Polynomial> all_maximal_minors(const PolyMatrix& m);

/// Increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace stiefel
