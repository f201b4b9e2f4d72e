#pragma once

// Dense matrices over Scalar with exact (or tolerance-based) elimination.

#include <optional>
#include <vector>

#include "spw/scalar.hpp"

namespace spw {

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  Matrix converted(const FieldOptions& opts) const;
  bool is_zero() const;
  std::string to_string() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form. Exact scalars
/// pivot on the first nonzero entry (lowest row index); floating scalars on
/// the largest magnitude.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one column per free variable, in the order of
/// the free columns. Each basis vector has a 1 in its free column.
Matrix nullspace(const Matrix& m);

Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace spw
