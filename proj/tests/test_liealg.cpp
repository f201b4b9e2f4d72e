#include "doctest.h"
#include "spw/reps.hpp"

using namespace spw;

namespace {

// All diagonal F = diag(x, y) with integer entries in [-2, 2] satisfying
// F rho1(X) = rho2(X) F, found by exhaustive search.
std::size_t grid_solutions(const Representation& r1, const Representation& r2) {
  std::size_t count = 0;
  for (long x = -2; x <= 2; ++x)
    for (long y = -2; y <= 2; ++y) {
      Matrix f{{Scalar(x), Scalar(0)}, {Scalar(0), Scalar(y)}};
      bool ok = true;
      for (const auto& name : odd_generator_names(r1.algebra)) ok = ok && f * r1.gen(name) == r2.gen(name) * f;
      count += ok;
    }
  return count;
}

}  // namespace

TEST_CASE("builtin structure constants are consistent") {
  for (AlgebraTag tag : {AlgebraTag::s11, AlgebraTag::su11}) {
    LieSuperAlgebra alg = builtin_algebra(tag);
    CHECK(check_structure_constants(alg).empty());
    CHECK(check_defining_matrices(alg).empty());
  }
}

TEST_CASE("su(1|1) brackets on the defining matrices") {
  LieSuperAlgebra alg = builtin_algebra(AlgebraTag::su11);
  const SuperMatrix& c = alg.defining.at("C");
  const SuperMatrix& u = alg.defining.at("U");
  const SuperMatrix& s = alg.defining.at("S");
  CHECK(supercommutator(c, u).is_zero());
  CHECK(supercommutator(c, s).is_zero());
  CHECK(supercommutator(u, s).is_zero());
  CHECK(supercommutator(u, u) == c * Scalar(-2));
  CHECK(supercommutator(s, s) == c * Scalar(-2));
}

TEST_CASE("corrupted tables are caught") {
  LieSuperAlgebra alg = builtin_algebra(AlgebraTag::su11);
  alg.brackets[{1, 2}][0] = GaussianRational(1);
  CHECK_FALSE(check_structure_constants(alg).empty());
  CHECK_FALSE(check_defining_matrices(alg).empty());
  LieSuperAlgebra s = builtin_algebra(AlgebraTag::s11);
  s.brackets.erase({0, 1});
  CHECK(check_structure_constants(s).front() == "missing bracket [C,Z]");
}

TEST_CASE("validation diagnostics") {
  CHECK(validate_representation(make_V_m(5)).empty());
  CHECK(validate_representation(make_adjoint_su11()).empty());
  Representation bad = make_pi_m(1, PiSign::plus);
  bad.generators["U"] = Matrix{{0, 1}, {1, 0}};
  auto d = validate_representation(bad);
  REQUIRE_FALSE(d.empty());
  CHECK(d.front() == "rho(U)^2 != -rho(C) at weight m=1");

  Representation mixed = direct_sum({make_pi_m(1, PiSign::plus), make_pi_m(2, PiSign::plus)});
  mixed.generators["U"](0, 3) = Scalar(1);
  auto m = validate_representation(mixed);
  CHECK(std::find(m.begin(), m.end(), "rho(U) does not commute with rho(C)") != m.end());

  Representation even = make_V_m(1);
  even.generators["Z"](0, 0) = Scalar(1);
  auto e = validate_representation(even);
  CHECK(std::find(e.begin(), e.end(), "rho(Z) is not odd") != e.end());

  Representation missing = make_V_m(1);
  missing.generators.erase("Z");
  CHECK(validate_representation(missing).front() == "missing generator Z");
}

TEST_CASE("intertwiners agree with exhaustive search") {
  for (long m : {-3, -1, 1, 2, 4}) {
    Representation p = make_pi_m(m, PiSign::plus);
    Representation q = make_pi_m(m, PiSign::minus);
    CHECK(find_even_intertwiners(p, q).empty());
    CHECK(grid_solutions(p, q) == 1);  // only F = 0
    CHECK(find_even_intertwiners(p, p).size() == 1);
    CHECK(grid_solutions(p, p) == 5);  // F = x I, x in [-2, 2]
    CHECK(find_even_intertwiners(make_V_m(m), make_V_m(m)).size() == 1);
  }
}

TEST_CASE("intertwiners between sums") {
  Representation a = direct_sum({make_pi_m(2, PiSign::plus), make_pi_m(2, PiSign::plus), make_pi_m(-1, PiSign::minus)});
  CHECK(find_even_intertwiners(a, a).size() == 5);  // gl(2) plus a scalar
  for (const Matrix& f : find_even_intertwiners(a, a))
    for (const auto& name : odd_generator_names(AlgebraTag::su11)) CHECK(f * a.gen(name) == a.gen(name) * f);
  CHECK(find_even_intertwiners(make_pi_m(2, PiSign::plus), make_pi_m(3, PiSign::plus)).empty());
}

TEST_CASE("floating representations") {
  FieldOptions f{ScalarKind::floating, 1e-9, 1};
  Representation p = make_pi_m(3, PiSign::plus, f);
  CHECK(p.scalar_kind() == ScalarKind::floating);
  CHECK(validate_representation(p).empty());
  CHECK(find_even_intertwiners(p, make_pi_m(3, PiSign::minus, f)).empty());
  CHECK_THROWS_AS(find_even_intertwiners(p, make_pi_m(3, PiSign::plus)), RepresentationError);
}
