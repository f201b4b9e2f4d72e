#pragma once

// Coefficient fields: exact Gaussian rationals, the quadratic extension
// Q(i)[s]/(s^2 + i m) that carries sqrt(-i m), and tolerance-compared floats.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace spw {

using Rational = mpq_class;

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public ScalarError {
 public:
  DivisionByZero() : ScalarError("division by zero") {}
};

/// Raised when two values from different quadratic extensions meet.
class FieldMismatch : public ScalarError {
 public:
  using ScalarError::ScalarError;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Returns r in Q(i) with r^2 = -i m when one exists (exactly m = +-2 q^2),
/// taking the principal branch sqrt(|m|/2) (1 - i sign(m)).
std::optional<GaussianRational> gaussian_sqrt_neg_im(long m);

/// c0 + c1 s with s^2 = -i m.
///
/// Values with c1 == 0 carry m == 0 and combine with any extension. When
/// -i m is already a square in Q(i) the generator is replaced by that
/// rational root on construction, so the stored ring is always a field.
class ExtendedScalar {
 public:
  ExtendedScalar() = default;
  ExtendedScalar(long c0) : c0_(c0) {}  // NOLINT(google-explicit-constructor)
  ExtendedScalar(GaussianRational c0) : c0_(std::move(c0)) {}  // NOLINT
  ExtendedScalar(GaussianRational c0, GaussianRational c1, long m);

  /// The generator s of the extension for weight m.
  static ExtendedScalar generator(long m);

  const GaussianRational& c0() const { return c0_; }
  const GaussianRational& c1() const { return c1_; }
  long m() const { return m_; }
  bool is_rational() const { return c1_.is_zero(); }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  ExtendedScalar conj() const;
  ExtendedScalar inverse() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  ExtendedScalar operator-() const;
  ExtendedScalar& operator+=(const ExtendedScalar& o);
  ExtendedScalar& operator-=(const ExtendedScalar& o);
  ExtendedScalar& operator*=(const ExtendedScalar& o);
  ExtendedScalar& operator/=(const ExtendedScalar& o) { return *this *= o.inverse(); }

  friend ExtendedScalar operator+(ExtendedScalar a, const ExtendedScalar& b) { return a += b; }
  friend ExtendedScalar operator-(ExtendedScalar a, const ExtendedScalar& b) { return a -= b; }
  friend ExtendedScalar operator*(ExtendedScalar a, const ExtendedScalar& b) { return a *= b; }
  friend ExtendedScalar operator/(ExtendedScalar a, const ExtendedScalar& b) { return a /= b; }
  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_ && a.m_ == b.m_;
  }

 private:
  long common_m(const ExtendedScalar& o) const;
  void normalize();

  GaussianRational c0_;
  GaussianRational c1_;
  long m_ = 0;
};

struct FloatScalar {
  std::complex<double> value;
  double tol = 1e-9;
};

enum class ScalarKind { exact, floating };

/// How constructors materialise coefficients. `branch` flips the sign of
/// every sqrt(-i m) handed out.
struct FieldOptions {
  ScalarKind kind = ScalarKind::exact;
  double tol = 1e-9;
  int branch = 1;
};

class Scalar {
 public:
  Scalar() : v_(ExtendedScalar{}) {}
  Scalar(long x) : v_(ExtendedScalar(x)) {}                 // NOLINT
  Scalar(int x) : v_(ExtendedScalar(long{x})) {}            // NOLINT
  Scalar(GaussianRational x) : v_(ExtendedScalar(std::move(x))) {}  // NOLINT
  Scalar(ExtendedScalar x) : v_(std::move(x)) {}            // NOLINT
  Scalar(FloatScalar x) : v_(x) {}                          // NOLINT

  static Scalar i() { return GaussianRational::i(); }
  static Scalar rational(long num, long den = 1);

  bool is_exact() const { return std::holds_alternative<ExtendedScalar>(v_); }
  const ExtendedScalar& exact() const;
  double tol() const;
  std::complex<double> to_complex() const;

  bool is_zero() const;
  bool is_one() const { return (*this - Scalar(1)).is_zero(); }
  Scalar conj() const;
  Scalar inverse() const;
  /// Exact values pass through unchanged in exact mode; in float mode they
  /// are evaluated on the principal branch.
  Scalar converted(const FieldOptions& opts) const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  /// Exact comparison for exact pairs; componentwise |delta| <= tol otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<ExtendedScalar, FloatScalar> v_;
};

/// sqrt(-i m): the extension generator in exact mode, the principal
/// branch sqrt(|m|/2) (1 - i sign(m)) in float mode; times opts.branch.
Scalar sqrt_neg_im(long m, const FieldOptions& opts = {});

/// Rational parsing helper: "p/q", "p", or a decimal integer string.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

}  // namespace spw
