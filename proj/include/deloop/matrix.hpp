#pragma once

#include "deloop/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace deloop {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix column(const Vector& v);
  static Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> data() const { return data_; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Scalar trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& s);
/// Flattens a matrix row-major into a vector.
Vector flatten(const Matrix& m);
Matrix unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols);
/// tr(A·B) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);

}  // namespace deloop
