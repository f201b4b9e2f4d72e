#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "spw/linalg.hpp"
#include "spw/random.hpp"

using namespace spw;

namespace {

// Leibniz expansion over all permutations.
Scalar leibniz(const Matrix& a) {
  std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Scalar term(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(random_gaussian(rng));
  return m;
}

}  // namespace

TEST_CASE("determinant matches the Leibniz formula") {
  Rng rng(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    Matrix a = random_matrix(rng, n, n);
    CHECK(determinant(a) == leibniz(a));
  }
}

TEST_CASE("inverse") {
  Rng rng(9);
  for (int k = 0; k < 10; ++k) {
    Matrix a = random_matrix(rng, 4, 4);
    if (determinant(a).is_zero()) continue;
    CHECK(inverse(a) * a == Matrix::identity(4));
  }
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), LinalgError);
}

TEST_CASE("rank and nullspace") {
  Matrix a{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(a) == 2);
  Matrix n = nullspace(a);
  REQUIRE(n.cols() == 1);
  CHECK((a * n).is_zero());
  CHECK(n(2, 0).is_one());  // 1 in the free column

  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    Matrix b = random_matrix(rng, 3, 6);
    Matrix kb = nullspace(b);
    CHECK(kb.cols() + rank(b) == 6);
    CHECK((b * kb).is_zero());
  }
}

TEST_CASE("solve") {
  Matrix a{{1, 1}, {1, -1}};
  Matrix b = Matrix::column({Scalar(3), Scalar(1)});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, b).has_value());
}

TEST_CASE("entries over an extension") {
  Scalar s = sqrt_neg_im(3);
  Matrix a{{s, Scalar(1)}, {Scalar(0), s}};
  CHECK(inverse(a) * a == Matrix::identity(2));
  CHECK(determinant(a) == s * s);
}

TEST_CASE("floating elimination") {
  FieldOptions f{ScalarKind::floating, 1e-9, 1};
  Matrix a = Matrix{{1, 2}, {3, 4}}.converted(f);
  CHECK(inverse(a) * a == Matrix::identity(2));
  CHECK(rank(Matrix{{1, 2}, {2, 4}}.converted(f)) == 1);
}
