#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sprugnoli/errors.hpp"
#include "sprugnoli/rational.hpp"
#include "sprugnoli/series.hpp"

namespace sprugnoli {

/// Dense square matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  /// From rows of integers; every row must have length rows.size().
  static Matrix from_rows(const std::vector<std::vector<long>>& rows);
  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  /// Top-left k x k block.
  Matrix leading(std::size_t k) const;
  bool is_lower_triangular() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Lower-triangular matrix of rationals; the matrix form of every array in
/// the Riordan family. Entries above the diagonal are structurally zero.
class TriMatrix {
 public:
  TriMatrix() = default;
  explicit TriMatrix(std::size_t dim) : dim_(dim), entries_(dim * (dim + 1) / 2) {}
  /// Rejects a matrix with a nonzero entry above the diagonal.
  explicit TriMatrix(const Matrix& m);
  static TriMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static TriMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  /// Entry (i, j); zero above the diagonal.
  const Rational& operator()(std::size_t i, std::size_t j) const;
  /// Writes entry (i, j), j <= i.
  void set(std::size_t i, std::size_t j, const Rational& value);

  /// Column j as a series of order dim - 1 (rows above j are zero).
  Series column(std::size_t j) const;
  /// Sets column j from the first dim coefficients of s (entries above the
  /// diagonal must vanish).
  void set_column(std::size_t j, const Series& s);

  std::vector<Rational> row(std::size_t i) const;
  TriMatrix leading(std::size_t k) const;
  Matrix dense() const;

  bool operator==(const TriMatrix&) const = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * (i + 1) / 2 + j; }

  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
TriMatrix operator+(const TriMatrix& a, const TriMatrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Exact inverse by forward substitution; throws MatrixError on a zero
/// diagonal entry.
TriMatrix inverse(const TriMatrix& m);

/// M * v for the coefficient vector of s (first dim coefficients).
std::vector<Rational> apply(const TriMatrix& m, const Series& s);

std::string to_string(const TriMatrix& m);
std::string to_string(const Matrix& m);

}  // namespace sprugnoli
