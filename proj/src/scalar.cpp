#include "spw/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace spw {

namespace {

void append_term(std::ostringstream& os, const Rational& q, const char* unit, bool& first) {
  if (sgn(q) == 0) return;
  if (!first) os << (sgn(q) < 0 ? " - " : " + ");
  else if (sgn(q) < 0) os << "-";
  Rational a = abs(q);
  if (*unit == '\0' || a != 1) os << rational_to_string(a);
  os << unit;
  first = false;
}

bool is_perfect_square(const mpz_class& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw ScalarError("malformed rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ScalarError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------- Q(i)

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  append_term(os, re_, "", first);
  append_term(os, im_, "i", first);
  return os.str();
}

std::optional<GaussianRational> gaussian_sqrt_neg_im(long m) {
  // (a + b i)^2 has zero real part only for a = +-b, giving +-2 a^2 i.
  if (m == 0 || m % 2 != 0) return std::nullopt;
  mpz_class half = std::abs(m) / 2;
  if (!is_perfect_square(half)) return std::nullopt;
  mpz_class q = sqrt(half);
  Rational re(q);
  Rational im(m > 0 ? -q : q);
  return GaussianRational(re, im);
}

// ---------------------------------------------------------------- Q(i)[s]

ExtendedScalar::ExtendedScalar(GaussianRational c0, GaussianRational c1, long m)
    : c0_(std::move(c0)), c1_(std::move(c1)), m_(m) {
  if (m_ == 0 && !c1_.is_zero()) throw ScalarError("extension generator requires a nonzero weight");
  normalize();
}

void ExtendedScalar::normalize() {
  if (m_ != 0 && !c1_.is_zero()) {
    if (auto root = gaussian_sqrt_neg_im(m_)) {
      c0_ += c1_ * *root;
      c1_ = GaussianRational();
    }
  }
  if (c1_.is_zero()) m_ = 0;
}

ExtendedScalar ExtendedScalar::generator(long m) {
  if (m == 0) throw ScalarError("degenerate weight");
  return {GaussianRational(), GaussianRational(1), m};
}

long ExtendedScalar::common_m(const ExtendedScalar& o) const {
  if (m_ == 0) return o.m_;
  if (o.m_ == 0 || o.m_ == m_) return m_;
  throw FieldMismatch("mixing sqrt(-i m) extensions for m=" + std::to_string(m_) + " and m=" +
                      std::to_string(o.m_));
}

ExtendedScalar ExtendedScalar::operator-() const {
  ExtendedScalar r = *this;
  r.c0_ = -r.c0_;
  r.c1_ = -r.c1_;
  return r;
}

ExtendedScalar& ExtendedScalar::operator+=(const ExtendedScalar& o) {
  m_ = common_m(o);
  c0_ += o.c0_;
  c1_ += o.c1_;
  normalize();
  return *this;
}

ExtendedScalar& ExtendedScalar::operator-=(const ExtendedScalar& o) {
  m_ = common_m(o);
  c0_ -= o.c0_;
  c1_ -= o.c1_;
  normalize();
  return *this;
}

ExtendedScalar& ExtendedScalar::operator*=(const ExtendedScalar& o) {
  long m = common_m(o);
  // s^2 = -i m
  GaussianRational s2(Rational(0), Rational(-m));
  GaussianRational c0 = c0_ * o.c0_ + c1_ * o.c1_ * s2;
  GaussianRational c1 = c0_ * o.c1_ + c1_ * o.c0_;
  c0_ = std::move(c0);
  c1_ = std::move(c1);
  m_ = m;
  normalize();
  return *this;
}

ExtendedScalar ExtendedScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (c1_.is_zero()) return ExtendedScalar(c0_.inverse());
  // (c0 + c1 s)(c0 - c1 s) = c0^2 + i m c1^2; nonzero because -i m is not a
  // square in Q(i) for any stored (non-split) m.
  GaussianRational den = c0_ * c0_ + GaussianRational(Rational(0), Rational(m_)) * c1_ * c1_;
  if (den.is_zero()) throw DivisionByZero();
  GaussianRational inv = den.inverse();
  return {c0_ * inv, -c1_ * inv, m_};
}

ExtendedScalar ExtendedScalar::conj() const {
  if (c1_.is_zero()) return ExtendedScalar(c0_.conj());
  // Under the principal embedding conj(s) = i sign(m) s.
  GaussianRational factor(Rational(0), Rational(m_ > 0 ? 1 : -1));
  return {c0_.conj(), c1_.conj() * factor, m_};
}

std::complex<double> ExtendedScalar::to_complex() const {
  std::complex<double> v = c0_.to_complex();
  if (!c1_.is_zero()) {
    double q = std::sqrt(std::abs(static_cast<double>(m_)) / 2.0);
    std::complex<double> s(q, m_ > 0 ? -q : q);
    v += c1_.to_complex() * s;
  }
  return v;
}

std::string ExtendedScalar::to_string() const {
  if (c1_.is_zero()) return c0_.to_string();
  std::string s1 = "s" + std::to_string(m_);
  std::string out;
  if (!c0_.is_zero()) out = c0_.to_string() + " + ";
  out += "(" + c1_.to_string() + ")*" + s1;
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return GaussianRational(q, Rational(0));
}

const ExtendedScalar& Scalar::exact() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return *e;
  throw ScalarError("exact value requested from a floating scalar");
}

double Scalar::tol() const {
  if (const auto* f = std::get_if<FloatScalar>(&v_)) return f->tol;
  return 0.0;
}

std::complex<double> Scalar::to_complex() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return e->to_complex();
  return std::get<FloatScalar>(v_).value;
}

bool Scalar::is_zero() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return e->is_zero();
  const auto& f = std::get<FloatScalar>(v_);
  return std::abs(f.value.real()) <= f.tol && std::abs(f.value.imag()) <= f.tol;
}

Scalar Scalar::conj() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return e->conj();
  const auto& f = std::get<FloatScalar>(v_);
  return FloatScalar{std::conj(f.value), f.tol};
}

Scalar Scalar::inverse() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return e->inverse();
  if (is_zero()) throw DivisionByZero();
  const auto& f = std::get<FloatScalar>(v_);
  return FloatScalar{1.0 / f.value, f.tol};
}

Scalar Scalar::converted(const FieldOptions& opts) const {
  if (opts.kind == ScalarKind::exact || !is_exact()) return *this;
  return FloatScalar{to_complex(), opts.tol};
}

std::string Scalar::to_string() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return e->to_string();
  const auto& f = std::get<FloatScalar>(v_);
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", f.value.real(), f.value.imag());
  return buf;
}

Scalar Scalar::operator-() const {
  if (const auto* e = std::get_if<ExtendedScalar>(&v_)) return -*e;
  const auto& f = std::get<FloatScalar>(v_);
  return FloatScalar{-f.value, f.tol};
}

namespace {

template <class Op>
void combine(std::variant<ExtendedScalar, FloatScalar>& lhs, const std::variant<ExtendedScalar, FloatScalar>& rhs,
             Op op) {
  auto* le = std::get_if<ExtendedScalar>(&lhs);
  const auto* re = std::get_if<ExtendedScalar>(&rhs);
  if (le && re) {
    op(*le, *re);
    return;
  }
  double tol = 0.0;
  std::complex<double> a;
  std::complex<double> b;
  if (le) {
    a = le->to_complex();
  } else {
    a = std::get<FloatScalar>(lhs).value;
    tol = std::get<FloatScalar>(lhs).tol;
  }
  if (re) {
    b = re->to_complex();
  } else {
    b = std::get<FloatScalar>(rhs).value;
    tol = std::max(tol, std::get<FloatScalar>(rhs).tol);
  }
  op(a, b);
  lhs = FloatScalar{a, tol};
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a += b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a -= b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a *= b; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return (a - b).is_zero();
}

Scalar sqrt_neg_im(long m, const FieldOptions& opts) {
  if (m == 0) throw ScalarError("degenerate weight");
  Scalar s = ExtendedScalar::generator(m);
  if (opts.branch < 0) s = -s;
  return s.converted(opts);
}

}  // namespace spw
