#include "doctest.h"
#include "spw/harmonic.hpp"
#include "spw/random.hpp"

using namespace spw;

namespace {

// Matrix coefficients via Grassmann-valued supermatrices: the product
// (I + theta rho(U))(I + eta rho(S)) computed entrywise in Lambda[theta, eta],
// then multiplied by t^{m_i}. Requires even basis vectors first.
std::map<std::pair<std::size_t, std::size_t>, Section> oracle_coefficients(const Representation& rep) {
  bool su = rep.algebra == AlgebraTag::su11;
  Algebra alg = grassmann_algebra({"theta", "eta"});
  auto [p, q] = rep.superdim();
  auto theta = GrassmannElement::generator(alg, 0);
  auto eta = GrassmannElement::generator(alg, 1);
  SuperMatrix id = SuperMatrix::identity(alg, p, q);
  SuperMatrix x = id + theta * SuperMatrix::from_numeric(alg, p, q, rep.gen(su ? "U" : "Z"));
  SuperMatrix r = su ? x * (id + eta * SuperMatrix::from_numeric(alg, p, q, rep.gen("S"))) : x;
  std::map<std::pair<std::size_t, std::size_t>, Section> out;
  for (std::size_t i = 0; i < rep.dim(); ++i)
    for (std::size_t j = 0; j < rep.dim(); ++j) {
      Section s(rep.algebra);
      for (const auto& [mono, c] : r(i, j).terms()) s.add(rep.basis[i].weight, mono.odd, c);
      out.emplace(std::make_pair(i, j), s);
    }
  return out;
}

Section random_section(Rng& rng, AlgebraTag group, long bound, bool allow_theta_eta_at_zero) {
  Section f(group);
  unsigned top = group == AlgebraTag::su11 ? 4 : 2;
  for (long m = -bound; m <= bound; ++m)
    for (unsigned mask = 0; mask < top; ++mask) {
      if (!allow_theta_eta_at_zero && m == 0 && mask == 3) continue;
      if (rng.coin()) f.add(m, mask, Scalar(random_gaussian(rng)));
    }
  return f;
}

}  // namespace

TEST_CASE("matrix coefficients agree with the supermatrix product") {
  std::vector<Representation> reps{make_adjoint_su11(), make_weight_zero_s11(WeightZeroKind::W)};
  for (long m : {-3, -1, 1, 2, 5}) {
    reps.push_back(make_pi_m(m, PiSign::plus));
    reps.push_back(make_pi_m(m, PiSign::minus));
    reps.push_back(make_V_m(m));
  }
  for (const auto& r : reps) CHECK(matrix_coefficients(r) == oracle_coefficients(r));
}

TEST_CASE("pi_m^+ coefficients in closed form") {
  for (long m : {-4, -1, 1, 3}) {
    Scalar s = sqrt_neg_im(m);
    auto c = matrix_coefficients(make_pi_m(m, PiSign::plus));
    Section e00 = Section::monomial(AlgebraTag::su11, m, 0) + Section::monomial(AlgebraTag::su11, m, kTheta | kEta, Scalar(m));
    Section e01 = Section::monomial(AlgebraTag::su11, m, kTheta, s) + Section::monomial(AlgebraTag::su11, m, kEta, -Scalar::i() * s);
    CHECK(c.at({0, 0}) == e00);
    CHECK(c.at({0, 1}) == e01);
  }
}

TEST_CASE("adjoint and V_m coefficients") {
  auto c = matrix_coefficients(make_adjoint_su11());
  Section one = Section::monomial(AlgebraTag::su11, 0, 0);
  for (std::size_t k = 0; k < 3; ++k) CHECK(c.at({k, k}) == one);
  CHECK(c.at({0, 1}) == Section::monomial(AlgebraTag::su11, 0, kTheta));
  CHECK(c.at({0, 2}) == Section::monomial(AlgebraTag::su11, 0, kEta));
  std::size_t nonzero = 0;
  for (const auto& [ij, s] : c) nonzero += !s.is_zero();
  CHECK(nonzero == 5);

  auto v = matrix_coefficients(make_V_m(3));
  CHECK(v.at({0, 0}) == Section::monomial(AlgebraTag::s11, 3, 0));
  CHECK(v.at({0, 1}) == Section::monomial(AlgebraTag::s11, 3, kTheta, sqrt_neg_im(3)));
}

TEST_CASE("expansion of t^2 theta") {
  Section f = Section::monomial(AlgebraTag::su11, 2, kTheta);
  ExpansionResult r = expand(f);
  CHECK(r.residual.is_zero());
  Scalar w = (Scalar(2) * sqrt_neg_im(2)).inverse();
  RepLabel p{RepLabel::Kind::pi_plus, 2};
  Coefficients expected{{{p, 0, 1}, w}, {{p, 1, 0}, w}};
  CHECK(r.coefficients == expected);
  CHECK(reconstruct(AlgebraTag::su11, r.coefficients) == f);
}

TEST_CASE("expansion of constants and theta eta") {
  ExpansionResult one = expand(Section::monomial(AlgebraTag::su11, 0, 0));
  CHECK(one.residual.is_zero());
  CHECK(one.coefficients == Coefficients{{{RepLabel{RepLabel::Kind::trivial, 0}, 0, 0}, Scalar(1)}});

  Section te = Section::monomial(AlgebraTag::su11, 0, kTheta | kEta);
  ExpansionResult r = expand(te);
  CHECK(r.coefficients.empty());
  CHECK(r.residual == te);
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(AlgebraTag::su11, {}).is_zero());
  Coefficients c{{{RepLabel{RepLabel::Kind::pi_plus, 1}, 0, 0}, Scalar(1)}};
  CHECK(reconstruct(AlgebraTag::su11, c) ==
        Section::monomial(AlgebraTag::su11, 1, 0) + Section::monomial(AlgebraTag::su11, 1, kTheta | kEta));
  Coefficients bad{{{RepLabel{RepLabel::Kind::pi_plus, 0}, 0, 0}, Scalar(1)}};
  CHECK_THROWS(reconstruct(AlgebraTag::su11, bad));
  Coefficients wrong{{{RepLabel{RepLabel::Kind::V, 1}, 0, 0}, Scalar(1)}};
  CHECK_THROWS_AS(reconstruct(AlgebraTag::su11, wrong), RepresentationError);
}

TEST_CASE("split is exact on random sections") {
  Rng rng(61);
  for (AlgebraTag g : {AlgebraTag::s11, AlgebraTag::su11}) {
    for (int k = 0; k < 10; ++k) {
      Section f = random_section(rng, g, 4, true);
      ExpansionResult r = expand(f);
      CHECK(reconstruct(g, r.coefficients) + r.residual == f);
      Section clean = random_section(rng, g, 4, false);
      CHECK(expand(clean).residual.is_zero());
    }
  }
}

TEST_CASE("expansion is linear") {
  Rng rng(67);
  for (int k = 0; k < 5; ++k) {
    Section f = random_section(rng, AlgebraTag::su11, 3, true);
    Section g = random_section(rng, AlgebraTag::su11, 3, true);
    Scalar a(random_gaussian(rng));
    Scalar b = Scalar(random_gaussian(rng)) + Scalar::i();
    ExpansionResult ef = expand(f);
    ExpansionResult eg = expand(g);
    ExpansionResult sum = expand(f * a + g * b);
    Coefficients expected;
    for (const auto& [key, c] : ef.coefficients) expected[key] += a * c;
    for (const auto& [key, c] : eg.coefficients) expected[key] += b * c;
    for (auto it = expected.begin(); it != expected.end();)
      it = it->second.is_zero() ? expected.erase(it) : std::next(it);
    CHECK(sum.coefficients == expected);
    CHECK(sum.residual == ef.residual * a + eg.residual * b);
  }
}

TEST_CASE("per-weight systems are invertible") {
  for (long m = -10; m <= 10; ++m) {
    if (m == 0) continue;
    auto c = matrix_coefficients(make_pi_m(m, PiSign::plus));
    Matrix a(4, 4);
    const unsigned monos[4] = {0, kTheta, kEta, kTheta | kEta};
    const std::pair<std::size_t, std::size_t> entries[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) a(r, k) = c.at(entries[k]).coefficient(m, monos[r]);
    CHECK_FALSE(determinant(a).is_zero());
  }
}

TEST_CASE("section arithmetic") {
  Section a = Section::monomial(AlgebraTag::su11, 1, kTheta, Scalar(2));
  CHECK((a - a).is_zero());
  CHECK((a * Scalar(0)).is_zero());
  CHECK_THROWS(Section::monomial(AlgebraTag::s11, 0, kEta));
  CHECK_THROWS(a + Section::monomial(AlgebraTag::s11, 0, 0));
  CHECK(parse_rep_label("pi(-3,+)") == RepLabel{RepLabel::Kind::pi_plus, -3});
  CHECK(parse_rep_label("V(2)").to_string() == "V(2)");
  CHECK_THROWS(parse_rep_label("W(1)"));
}
