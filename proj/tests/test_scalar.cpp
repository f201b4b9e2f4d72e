#include <complex>

#include "doctest.h"
#include "spw/scalar.hpp"

using namespace spw;
using cd = std::complex<double>;

namespace {

bool close(cd a, cd b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

// Principal square root from the standard library, independent of the
// closed form used by the library.
cd principal_root(long m) { return std::sqrt(cd(0, -static_cast<double>(m))); }

}  // namespace

TEST_CASE("gaussian rationals") {
  GaussianRational a(Rational(1, 2), Rational(3));
  GaussianRational b(Rational(-2), Rational(1, 3));
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
  CHECK(a.conj().conj() == a);
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(GaussianRational().inverse(), DivisionByZero);
}

TEST_CASE("extension generator squares to -im") {
  for (long m : {-7, -3, -1, 1, 3, 5, 10}) {
    Scalar s = sqrt_neg_im(m);
    CHECK(s * s == -Scalar::i() * Scalar(m));
    CHECK(close(s.to_complex(), principal_root(m)));
  }
}

TEST_CASE("split weights use the rational root") {
  for (long m : {2, -2, 8, -18}) {
    auto r = gaussian_sqrt_neg_im(m);
    REQUIRE(r.has_value());
    CHECK(*r * *r == GaussianRational(Rational(0), Rational(-m)));
    Scalar s = sqrt_neg_im(m);
    CHECK(s.exact().is_rational());
    CHECK(close(s.to_complex(), principal_root(m)));
  }
  CHECK_FALSE(gaussian_sqrt_neg_im(3).has_value());
  CHECK(sqrt_neg_im(2) == Scalar(GaussianRational(Rational(1), Rational(-1))));
}

TEST_CASE("inverse and conjugation agree with complex arithmetic") {
  for (long m : {-5, -1, 3, 6}) {
    Scalar s = sqrt_neg_im(m);
    Scalar x = Scalar(GaussianRational(Rational(2, 3), Rational(-1))) + Scalar(GaussianRational(Rational(1), Rational(4))) * s;
    CHECK((x * x.inverse()).is_one());
    CHECK(close(x.inverse().to_complex(), 1.0 / x.to_complex()));
    CHECK(close(x.conj().to_complex(), std::conj(x.to_complex())));
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("branch option flips the root") {
  FieldOptions neg;
  neg.branch = -1;
  CHECK(sqrt_neg_im(3, neg) == -sqrt_neg_im(3));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(sqrt_neg_im(1) + sqrt_neg_im(3), FieldMismatch);
  CHECK_THROWS(sqrt_neg_im(0));
  // Pure values mix with any extension.
  CHECK_NOTHROW(Scalar(2) * sqrt_neg_im(3) + Scalar::i());
}

TEST_CASE("floating mode compares within tolerance") {
  FieldOptions f{ScalarKind::floating, 1e-6, 1};
  Scalar s = sqrt_neg_im(3, f);
  CHECK_FALSE(s.is_exact());
  CHECK(s * s == -Scalar::i() * Scalar(3));
  Scalar near = Scalar(FloatScalar{{1.0 + 1e-8, 0.0}, 1e-6});
  CHECK(near == Scalar(1));
  Scalar far = Scalar(FloatScalar{{1.0 + 1e-3, 0.0}, 1e-6});
  CHECK_FALSE(far == Scalar(1));
  CHECK(close(sqrt_neg_im(5).converted(f).to_complex(), principal_root(5)));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
}
