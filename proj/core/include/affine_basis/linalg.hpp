#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affine_basis/rational.hpp"

namespace affine_basis {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& o) const = default;

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination on the integer matrix obtained
// by clearing row denominators. Pivot: first nonzero row in the current column.
std::size_t rank_exact(const Matrix& m);

// Pivot columns of the same elimination, i.e. the lexicographically first
// maximal independent set of columns.
std::vector<std::size_t> independent_columns(const Matrix& m);

// Reduced row echelon form over Q with deterministic pivoting.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};
Echelon reduced_row_echelon(Matrix m);

// Columns of the returned matrix form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

// Some solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

// Indices of a minimal linearly dependent subset of the columns, or empty if
// the columns are independent.
std::vector<std::size_t> minimal_dependent_columns(const Matrix& m);

}  // namespace affine_basis
