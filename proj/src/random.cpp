#include "spw/random.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace spw {

long Rng::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

GaussianRational random_gaussian(Rng& rng, long bound, long den_bound) {
  Rational den(rng.uniform(1, den_bound));
  Rational re(rng.uniform(-bound, bound));
  Rational im(rng.uniform(-bound, bound));
  return {Rational(re / den), Rational(im / den)};
}

GrassmannElement random_element(Rng& rng, const Algebra& alg, Parity parity) {
  Terms terms;
  std::uint32_t count = 1u << alg->odd_count();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    int deg = std::popcount(mask);
    if (parity == Parity::even && deg % 2 != 0) continue;
    if (parity == Parity::odd && deg % 2 == 0) continue;
    if (!rng.coin()) continue;
    GaussianRational c = random_gaussian(rng);
    if (c.is_zero()) continue;
    terms[Monomial{std::vector<int>(alg->even_count(), 0), mask}] = Scalar(c);
  }
  return GrassmannElement(alg, std::move(terms));
}

namespace {

GrassmannElement random_unit(Rng& rng, const Algebra& alg) {
  GrassmannElement x = random_element(rng, alg, Parity::even);
  GaussianRational body;
  while (body.is_zero()) body = random_gaussian(rng);
  return x - GrassmannElement(alg, x.constant_term()) + GrassmannElement(alg, Scalar(body));
}

}  // namespace

SuperMatrix random_even_invertible_11(Rng& rng, const Algebra& alg) {
  std::vector<GrassmannElement> e{random_unit(rng, alg), random_element(rng, alg, Parity::odd),
                                  random_element(rng, alg, Parity::odd), random_unit(rng, alg)};
  return SuperMatrix(1, 1, std::move(e));
}

Matrix random_even_invertible(Rng& rng, const Representation& rep, bool extended) {
  std::map<std::pair<long, int>, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < rep.dim(); ++k) classes[{rep.basis[k].weight, rep.basis[k].parity}].push_back(k);
  Matrix q(rep.dim(), rep.dim());
  for (const auto& [key, idx] : classes) {
    long m = key.first;
    std::optional<Scalar> s;
    if (extended && m != 0) s = sqrt_neg_im(m);
    std::size_t n = idx.size();
    Matrix block(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Scalar x = random_gaussian(rng);
          if (s) x += Scalar(random_gaussian(rng)) * *s;
          block(i, j) = x;
        }
    } while (rank(block) != n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(idx[i], idx[j]) = block(i, j);
  }
  return q;
}

Representation scramble(Rng& rng, const Representation& rep, bool extended) {
  Representation r = change_basis(rep, random_even_invertible(rng, rep, extended));
  std::vector<std::size_t> perm(rep.dim());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[rng.uniform(0, static_cast<long>(k) - 1)]);
  return permute_basis(r, perm);
}

RandomSum random_block_sum(Rng& rng, AlgebraTag algebra, std::size_t max_blocks, long bound) {
  auto blocks = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_blocks)));
  std::vector<Representation> parts;
  std::vector<std::string> labels;
  std::size_t p0 = 0;
  std::size_t q0 = 0;
  auto weight = [&] {
    long m = 0;
    while (m == 0) m = rng.uniform(-bound, bound);
    return m;
  };
  bool su = algebra == AlgebraTag::su11;
  for (std::size_t b = 0; b < blocks; ++b) {
    switch (rng.uniform(0, 4)) {
      case 0:
      case 1: {
        long m = weight();
        if (su) {
          PiSign sign = rng.coin() ? PiSign::plus : PiSign::minus;
          parts.push_back(make_pi_m(m, sign));
          labels.push_back(BlockLabel{sign == PiSign::plus ? BlockLabel::Kind::pi_plus : BlockLabel::Kind::pi_minus, m}
                               .to_string());
        } else {
          parts.push_back(make_V_m(m));
          labels.push_back(BlockLabel{BlockLabel::Kind::V, m}.to_string());
        }
        break;
      }
      case 2:
        if (su) {
          parts.push_back(make_adjoint_su11());
          p0 += 1;
          q0 += 2;
        } else {
          parts.push_back(make_weight_zero_s11(WeightZeroKind::W));
          labels.push_back("Ad");
        }
        break;
      case 3:
        if (su) {
          parts.push_back(make_adjoint_su11());
          p0 += 1;
          q0 += 2;
        } else {
          parts.push_back(make_weight_zero_s11(WeightZeroKind::PiW));
          labels.push_back("PiAd");
        }
        break;
      default: {
        bool odd = rng.coin();
        parts.push_back(su ? make_trivial_su11(odd ? 0 : 1, odd ? 1 : 0)
                           : make_weight_zero_s11(WeightZeroKind::trivial, odd ? 0 : 1, odd ? 1 : 0));
        (odd ? q0 : p0) += 1;
        break;
      }
    }
  }
  if (p0 + q0 > 0)
    labels.push_back(BlockLabel{su ? BlockLabel::Kind::weight_zero : BlockLabel::Kind::trivial, 0, p0, q0}.to_string());
  std::sort(labels.begin(), labels.end());
  return {direct_sum(parts), labels};
}

}  // namespace spw
