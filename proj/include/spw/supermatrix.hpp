#pragma once

#include <vector>

#include "spw/grassmann.hpp"
#include "spw/linalg.hpp"

namespace spw {

/// A (p|q)-graded square matrix with entries in a supercommutative algebra.
/// Rows/columns 0..p-1 are even, p..p+q-1 odd.
class SuperMatrix {
 public:
  SuperMatrix(Algebra alg, std::size_t pdim, std::size_t qdim);
  SuperMatrix(std::size_t pdim, std::size_t qdim, std::vector<GrassmannElement> entries);

  static SuperMatrix identity(const Algebra& alg, std::size_t pdim, std::size_t qdim);
  /// Lifts a numeric matrix into the algebra (entries become constants).
  static SuperMatrix from_numeric(const Algebra& alg, std::size_t pdim, std::size_t qdim, const Matrix& m);

  const Algebra& algebra() const { return alg_; }
  std::size_t pdim() const { return pdim_; }
  std::size_t qdim() const { return qdim_; }
  std::size_t size() const { return pdim_ + qdim_; }
  bool row_is_odd(std::size_t i) const { return i >= pdim_; }

  GrassmannElement& operator()(std::size_t i, std::size_t j) { return entries_[i * size() + j]; }
  const GrassmannElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

  /// even: block-diagonal entries even, off-diagonal odd; odd: reversed.
  /// Zero entries are compatible with either parity.
  bool is_even() const;
  bool is_odd() const;
  Parity parity() const;
  bool is_zero() const;
  std::string to_string() const;

  SuperMatrix operator-() const;
  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  SuperMatrix& operator*=(const GrassmannElement& c);

  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  /// Left multiplication of every entry: (c X)_ij = c X_ij.
  friend SuperMatrix operator*(const GrassmannElement& c, const SuperMatrix& x);
  friend SuperMatrix operator*(SuperMatrix x, const Scalar& c);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

 private:
  bool has_parity(int p) const;
  void check_same(const SuperMatrix& o) const;

  Algebra alg_;
  std::size_t pdim_;
  std::size_t qdim_;
  std::vector<GrassmannElement> entries_;
};

/// [X, Y] = XY - (-1)^{|X||Y|} YX for homogeneous X, Y.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

/// Ber [[a, beta], [gamma, d]] = d^{-1} (a - beta d^{-1} gamma) for even 1|1 matrices.
GrassmannElement berezinian(const SuperMatrix& a);

/// Inverse of an even invertible 1|1 supermatrix via block formulas.
SuperMatrix inverse_1x1(const SuperMatrix& a);

}  // namespace spw
