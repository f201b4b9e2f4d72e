#include <bit>

#include "doctest.h"
#include "spw/grassmann.hpp"
#include "spw/random.hpp"

using namespace spw;

namespace {

// Sign of sorting the concatenation (bits of a, then bits of b) by counting inversions.
int inversion_sign(std::uint32_t a, std::uint32_t b) {
  std::vector<int> seq;
  for (int k = 0; k < 32; ++k)
    if (a & (1u << k)) seq.push_back(k);
  for (int k = 0; k < 32; ++k)
    if (b & (1u << k)) seq.push_back(k);
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("merge sign matches inversion count") {
  for (std::uint32_t a = 0; a < 32; ++a)
    for (std::uint32_t b = 0; b < 32; ++b)
      if ((a & b) == 0) CHECK(merge_sign(a, b) == inversion_sign(a, b));
}

TEST_CASE("odd generators anticommute and square to zero") {
  Algebra alg = grassmann_algebra({"x", "y", "z"});
  auto x = GrassmannElement::generator(alg, "x");
  auto y = GrassmannElement::generator(alg, "y");
  auto z = GrassmannElement::generator(alg, "z");
  CHECK(x * y == -(y * x));
  CHECK((x * x).is_zero());
  CHECK((x * y * z) == (z * x * y));
  CHECK((x * y * z) == -(y * x * z));
  CHECK((x * y).parity() == Parity::even);
  CHECK((x + x * y).parity() == Parity::inhomogeneous);
  CHECK(x.parity() == Parity::odd);
}

TEST_CASE("even elements are central") {
  Rng rng(7);
  Algebra alg = grassmann_algebra({"a", "b", "c", "d"});
  for (int k = 0; k < 20; ++k) {
    auto e = random_element(rng, alg, Parity::even);
    auto o1 = random_element(rng, alg, Parity::odd);
    auto o2 = random_element(rng, alg, Parity::odd);
    CHECK(e * o1 == o1 * e);
    CHECK(o1 * o2 == -(o2 * o1));
    CHECK((o1 * o1).is_zero());
  }
}

TEST_CASE("inverse through the body") {
  Rng rng(11);
  Algebra alg = grassmann_algebra({"a", "b", "c", "d"});
  GrassmannElement one(alg, Scalar(1));
  for (int k = 0; k < 20; ++k) {
    auto x = random_element(rng, alg, Parity::even);
    x += GrassmannElement(alg, Scalar(3)) - GrassmannElement(alg, x.constant_term());
    CHECK(x * x.inverse() == one);
    CHECK(x.inverse() * x == one);
    CHECK(x.pow(-2) * x.pow(2) == one);
  }
  auto a = GrassmannElement::generator(alg, 0);
  CHECK_THROWS_AS(a.inverse(), AlgebraError);
}

TEST_CASE("laurent even variables") {
  GeneratorSet g;
  g.odd_names = {"beta", "gamma"};
  g.even_names = {"a"};
  Algebra alg = make_algebra(g);
  auto a = GrassmannElement::even_variable(alg, "a");
  auto beta = GrassmannElement::generator(alg, "beta");
  GrassmannElement one(alg, Scalar(1));
  CHECK(a * a.inverse() == one);
  CHECK(a.inverse() == GrassmannElement::even_variable(alg, "a", -1));
  auto gamma = GrassmannElement::generator(alg, "gamma");
  // a (1 + beta gamma) has inverse a^{-1} (1 - beta gamma).
  auto u = a + a * beta * gamma;
  CHECK(u.inverse() == a.inverse() * (one - beta * gamma));
  CHECK_THROWS_AS((a + one).inverse(), AlgebraError);
}

TEST_CASE("star is an antilinear involutive automorphism") {
  Rng rng(3);
  Algebra alg = grassmann_algebra({"b", "bbar", "c", "cbar"}, {{0, 1}, {2, 3}});
  auto b = GrassmannElement::generator(alg, "b");
  auto bbar = GrassmannElement::generator(alg, "bbar");
  CHECK(b.star() == bbar);
  CHECK((b * Scalar::i()).star() == bbar * -Scalar::i());
  for (int k = 0; k < 20; ++k) {
    auto x = random_element(rng, alg, Parity::inhomogeneous);
    auto y = random_element(rng, alg, Parity::inhomogeneous);
    CHECK(x.star().star() == x);
    CHECK((x * y).star() == x.star() * y.star());
    CHECK((x + y).star() == x.star() + y.star());
  }
}

TEST_CASE("validation of generator sets") {
  GeneratorSet dup;
  dup.odd_names = {"x", "x"};
  CHECK_THROWS_AS(make_algebra(dup), AlgebraError);
  GeneratorSet bad;
  bad.odd_names = {"x", "y"};
  bad.has_star = true;
  bad.odd_pairing = {1, 1};
  CHECK_THROWS_AS(make_algebra(bad), AlgebraError);
  Algebra a1 = grassmann_algebra({"x"});
  Algebra a2 = grassmann_algebra({"y"});
  CHECK_THROWS_AS(GrassmannElement::generator(a1, 0) + GrassmannElement::generator(a2, 0), AlgebraError);
}
