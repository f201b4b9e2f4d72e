#include "doctest.h"
#include "spw/random.hpp"
#include "spw/supergroup.hpp"

using namespace spw;

namespace {

GrassmannElement c(const Algebra& alg, const Scalar& x) { return GrassmannElement(alg, x); }

// diag(t, star(t)^{-1}) (1 + theta U)(1 + eta S) multiplied out by hand.
GL11Point product_by_hand(const FactorizationTriple& f) {
  const Algebra& alg = f.t.algebra();
  auto one = c(alg, Scalar(1));
  auto i = c(alg, Scalar::i());
  auto tbar_inv = f.t.star().inverse();
  auto te = f.theta * f.eta;
  return {f.t * (one - te), f.t * (f.theta + i * f.eta), -(i * tbar_inv * (f.theta - i * f.eta)),
          tbar_inv * (one + te)};
}

GL11Point identity_point() {
  Algebra alg = grassmann_algebra({}, {}, true);
  auto one = c(alg, Scalar(1));
  return {one, GrassmannElement(alg), GrassmannElement(alg), one};
}

}  // namespace

TEST_CASE("identity belongs to every group") {
  GL11Point e = identity_point();
  for (GroupTag g : {GroupTag::sl11, GroupTag::su11, GroupTag::su11_minus}) CHECK(membership(e, g).member);
}

TEST_CASE("membership diagnostics") {
  Algebra alg = grassmann_algebra({}, {}, true);
  GL11Point g{c(alg, Scalar(2)), GrassmannElement(alg), GrassmannElement(alg), c(alg, Scalar(1))};
  auto m = membership(g, GroupTag::sl11);
  CHECK_FALSE(m.member);
  CHECK(m.diagnostic == "Ber != 1");
  GL11Point h{c(alg, Scalar(2)), GrassmannElement(alg), GrassmannElement(alg), c(alg, Scalar(2))};
  CHECK(membership(h, GroupTag::sl11).member);
  auto su = membership(h, GroupTag::su11);
  CHECK_FALSE(su.member);
  CHECK(su.diagnostic == "d != star(a)^-1");
}

TEST_CASE("defactorize agrees with the hand-multiplied product") {
  for (GroupTag isomer : {GroupTag::su11, GroupTag::su11_minus}) {
    FactorizationTriple f = generic_triple(isomer);
    CHECK(defactorize(f) == product_by_hand(f));
    CHECK(membership(defactorize(f), isomer).member);
  }
}

TEST_CASE("factorize and defactorize are inverse on both isomers") {
  for (GroupTag isomer : {GroupTag::su11, GroupTag::su11_minus}) {
    GenericSU11 g = generic_su11_point(isomer);
    CHECK(membership(g.point, isomer).member);
    FactorizationTriple f = factorize(g.point);
    CHECK(defactorize(f) == g.point);
    FactorizationTriple t = generic_triple(isomer);
    CHECK(factorize(defactorize(t)) == t);
    CHECK(f.t * f.t.star() == c(g.algebra, Scalar(1)));
  }
}

TEST_CASE("factorization coordinates in closed form") {
  // Solved by hand from the product: with abar = star(a), betabar = star(beta),
  //   su11:       t = a(1 + (i/2) beta betabar), theta = (betabar a + beta abar)/2,
  //               eta = i(betabar a - beta abar)/2
  //   su11-minus: t = a(1 - (i/2) beta betabar), theta = (i/2)(betabar a + beta abar),
  //               eta = -(betabar a - beta abar)/2
  // where beta is the free odd coordinate of the generic point.
  Scalar half = Scalar::rational(1, 2);
  Scalar i = Scalar::i();
  {
    GenericSU11 g = generic_su11_point(GroupTag::su11);
    auto one = c(g.algebra, Scalar(1));
    auto a = g.a;
    auto ab = a.star();
    auto b = g.beta;
    auto bb = b.star();
    FactorizationTriple f = factorize(g.point);
    CHECK(f.t == a * (one + c(g.algebra, i * half) * b * bb));
    CHECK(f.theta == (bb * a + b * ab) * half);
    CHECK(f.eta == (bb * a - b * ab) * (i * half));
    CHECK(f.theta.star() == f.theta);
    CHECK(f.eta.star() == f.eta);
  }
  {
    GenericSU11 g = generic_su11_point(GroupTag::su11_minus);
    auto one = c(g.algebra, Scalar(1));
    auto a = g.a;
    auto ab = a.star();
    auto b = g.beta;
    auto bb = b.star();
    FactorizationTriple f = factorize(g.point);
    CHECK(f.t == a * (one - c(g.algebra, i * half) * b * bb));
    CHECK(f.theta == (bb * a + b * ab) * (i * half));
    CHECK(f.eta == -((bb * a - b * ab) * half));
    CHECK(f.theta.star() == -f.theta);
    CHECK(f.eta.star() == -f.eta);
  }
}

TEST_CASE("closed-form candidate") {
  ConventionResolution res = resolve_factorization_convention();
  REQUIRE(res.findings.size() == 2);
  for (const auto& f : res.findings) {
    CHECK(f.exact_round_trip);
    CHECK_FALSE(f.candidate_round_trip);
  }
  CHECK(res.findings[0].theta_matches);
  CHECK_FALSE(res.findings[0].t_matches);
  CHECK(res.findings[1].t_matches);
  CHECK(res.findings[0].theta_reality == "real");
  CHECK(res.findings[1].eta_reality == "imaginary");
}

TEST_CASE("factorize rejects non-members") {
  Algebra alg = grassmann_algebra({}, {}, true);
  GL11Point g{c(alg, Scalar(2)), GrassmannElement(alg), GrassmannElement(alg), c(alg, Scalar::rational(1, 2))};
  CHECK_THROWS_AS(factorize(g), GroupError);
}

TEST_CASE("involutions") {
  S11Point p = generic_s11_point();
  CHECK(rho_s11(rho_s11(p)) == p);
  GL11Point g = generic_sl11_point();
  CHECK(membership(g, GroupTag::sl11).member);
  CHECK(sigma_su(sigma_su(g)) == g);
  CHECK_FALSE(sigma_su(g) == g);
  GenericSU11 su = generic_su11_point(GroupTag::su11);
  CHECK(sigma_su(su.point) == su.point);
}

TEST_CASE("sigma-fixed points are exactly the members") {
  Rng rng(17);
  Algebra alg = grassmann_algebra({"x1", "x2", "x3"}, {}, true);
  for (int k = 0; k < 30; ++k) {
    GL11Point g = GL11Point::from_matrix(random_even_invertible_11(rng, alg));
    CHECK((sigma_su(g) == g) == membership(g, GroupTag::su11).member);
  }
  // Numeric members: a = e^{i phi} style unit with star(a) a = 1.
  Algebra num = grassmann_algebra({}, {}, true);
  GaussianRational u(Rational(3, 5), Rational(4, 5));
  GL11Point m{c(num, Scalar(u)), GrassmannElement(num), GrassmannElement(num), c(num, Scalar(u))};
  CHECK(membership(m, GroupTag::su11).member);
  CHECK(sigma_su(m) == m);
}

TEST_CASE("SU(1|1) is closed under products") {
  auto [g, h] = generic_su11_pair();
  GL11Point gh = GL11Point::from_matrix(g.matrix() * h.matrix());
  CHECK(membership(gh, GroupTag::su11).member);
  CHECK(berezinian(gh.matrix()) == c(gh.algebra(), Scalar(1)));
}

TEST_CASE("generators of su(1|1)") {
  Algebra alg = grassmann_algebra({}, {}, true);
  SuperMatrix u = su11_U(alg);
  SuperMatrix s = su11_S(alg);
  SuperMatrix c_mat = SuperMatrix::identity(alg, 1, 1) * Scalar::i();
  CHECK(supercommutator(u, u) == c_mat * Scalar(-2));
  CHECK(supercommutator(s, s) == c_mat * Scalar(-2));
  CHECK(supercommutator(u, s).is_zero());
}
