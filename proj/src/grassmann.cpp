#include "spw/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace spw {

int Monomial::odd_degree() const { return std::popcount(odd); }

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "inhomogeneous";
  }
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  while (b != 0) {
    int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(j >= 31 ? 0u : (a >> (j + 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

// ---------------------------------------------------------------- GeneratorSet

int GeneratorSet::odd_index(const std::string& name) const {
  auto it = std::find(odd_names.begin(), odd_names.end(), name);
  return it == odd_names.end() ? -1 : static_cast<int>(it - odd_names.begin());
}

int GeneratorSet::even_index(const std::string& name) const {
  auto it = std::find(even_names.begin(), even_names.end(), name);
  return it == even_names.end() ? -1 : static_cast<int>(it - even_names.begin());
}

bool GeneratorSet::same_structure(const GeneratorSet& o) const {
  return odd_names == o.odd_names && even_names == o.even_names && has_star == o.has_star &&
         odd_pairing == o.odd_pairing && even_pairing == o.even_pairing && odd_star_rules == o.odd_star_rules &&
         even_star_rules == o.even_star_rules;
}

namespace {

void check_involution(const std::vector<int>& pairing, std::size_t n, const char* what) {
  if (pairing.size() != n) throw AlgebraError(std::string(what) + " pairing has wrong length");
  for (std::size_t k = 0; k < n; ++k) {
    int p = pairing[k];
    if (p < 0 || static_cast<std::size_t>(p) >= n || pairing[p] != static_cast<int>(k))
      throw AlgebraError(std::string(what) + " pairing is not an involution");
  }
}

void check_names(const std::vector<std::string>& names, std::set<std::string>& seen) {
  for (const auto& n : names) {
    if (n.empty()) throw AlgebraError("empty generator name");
    if (!seen.insert(n).second) throw AlgebraError("duplicate generator name '" + n + "'");
  }
}

void check_terms(const Terms& terms, const GeneratorSet& g) {
  for (const auto& [mono, c] : terms) {
    if (mono.exps.size() != g.even_count()) throw AlgebraError("monomial exponent vector has wrong length");
    if (g.odd_count() < 32 && (mono.odd >> g.odd_count()) != 0)
      throw AlgebraError("monomial references an unknown odd generator");
  }
}

}  // namespace

Algebra make_algebra(GeneratorSet gens) {
  if (gens.odd_count() > 31) throw AlgebraError("at most 31 odd generators are supported");
  std::set<std::string> seen;
  check_names(gens.odd_names, seen);
  check_names(gens.even_names, seen);
  if (gens.has_star) {
    if (gens.odd_pairing.empty()) {
      gens.odd_pairing.resize(gens.odd_count());
      for (std::size_t k = 0; k < gens.odd_count(); ++k) gens.odd_pairing[k] = static_cast<int>(k);
    }
    if (gens.even_pairing.empty()) {
      gens.even_pairing.resize(gens.even_count());
      for (std::size_t k = 0; k < gens.even_count(); ++k) gens.even_pairing[k] = static_cast<int>(k);
    }
    check_involution(gens.odd_pairing, gens.odd_count(), "odd");
    check_involution(gens.even_pairing, gens.even_count(), "even");
  } else if (!gens.odd_pairing.empty() || !gens.even_pairing.empty() || !gens.odd_star_rules.empty() ||
             !gens.even_star_rules.empty()) {
    throw AlgebraError("pairings or star rules given without a star structure");
  }
  for (const auto& [k, rule] : gens.odd_star_rules) {
    if (k < 0 || static_cast<std::size_t>(k) >= gens.odd_count()) throw AlgebraError("odd star rule index");
    check_terms(rule, gens);
    for (const auto& [mono, c] : rule)
      if (mono.odd_degree() % 2 != 1) throw AlgebraError("odd star rule image must be odd");
  }
  for (const auto& [k, rule] : gens.even_star_rules) {
    if (k < 0 || static_cast<std::size_t>(k) >= gens.even_count()) throw AlgebraError("even star rule index");
    check_terms(rule, gens);
    for (const auto& [mono, c] : rule)
      if (mono.odd_degree() % 2 != 0) throw AlgebraError("even star rule image must be even");
  }
  return std::make_shared<const GeneratorSet>(std::move(gens));
}

Algebra grassmann_algebra(std::vector<std::string> odd_names, std::vector<std::pair<int, int>> pairs,
                          bool with_star) {
  GeneratorSet g;
  g.odd_names = std::move(odd_names);
  g.has_star = with_star || !pairs.empty();
  if (g.has_star) {
    g.odd_pairing.resize(g.odd_count());
    for (std::size_t k = 0; k < g.odd_count(); ++k) g.odd_pairing[k] = static_cast<int>(k);
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= g.odd_count() ||
          static_cast<std::size_t>(b) >= g.odd_count())
        throw AlgebraError("pairing index out of range");
      g.odd_pairing[a] = b;
      g.odd_pairing[b] = a;
    }
  }
  return make_algebra(std::move(g));
}

const Algebra& scalar_algebra() {
  static const Algebra alg = [] {
    GeneratorSet g;
    g.has_star = true;
    return make_algebra(std::move(g));
  }();
  return alg;
}

// ---------------------------------------------------------------- element

GrassmannElement::GrassmannElement(Algebra alg) : alg_(std::move(alg)) {
  if (!alg_) throw AlgebraError("null algebra");
}

GrassmannElement::GrassmannElement(Algebra alg, Scalar c) : GrassmannElement(std::move(alg)) {
  add_term(Monomial{std::vector<int>(alg_->even_count(), 0), 0}, c);
}

GrassmannElement::GrassmannElement(Algebra alg, Terms terms) : GrassmannElement(std::move(alg)) {
  check_terms(terms, *alg_);
  for (auto& [mono, c] : terms)
    if (!c.is_zero()) terms_.emplace(mono, std::move(c));
}

GrassmannElement GrassmannElement::generator(const Algebra& alg, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= alg->odd_count()) throw AlgebraError("odd generator index");
  Terms t;
  t.emplace(Monomial{std::vector<int>(alg->even_count(), 0), 1u << k}, Scalar(1));
  return {alg, std::move(t)};
}

GrassmannElement GrassmannElement::generator(const Algebra& alg, const std::string& name) {
  int k = alg->odd_index(name);
  if (k < 0) throw AlgebraError("unknown odd generator '" + name + "'");
  return generator(alg, k);
}

GrassmannElement GrassmannElement::even_variable(const Algebra& alg, int k, int exp) {
  if (k < 0 || static_cast<std::size_t>(k) >= alg->even_count()) throw AlgebraError("even variable index");
  Monomial mono{std::vector<int>(alg->even_count(), 0), 0};
  mono.exps[k] = exp;
  Terms t;
  t.emplace(std::move(mono), Scalar(1));
  return {alg, std::move(t)};
}

GrassmannElement GrassmannElement::even_variable(const Algebra& alg, const std::string& name, int exp) {
  int k = alg->even_index(name);
  if (k < 0) throw AlgebraError("unknown even variable '" + name + "'");
  return even_variable(alg, k, exp);
}

void GrassmannElement::check_same(const GrassmannElement& o) const {
  if (alg_ == o.alg_) return;
  if (!alg_->same_structure(*o.alg_)) throw AlgebraError("elements of different generator sets");
}

void GrassmannElement::add_term(const Monomial& mono, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Parity GrassmannElement::parity() const {
  bool even = false;
  bool odd = false;
  for (const auto& [mono, c] : terms_) (mono.odd_degree() % 2 ? odd : even) = true;
  if (odd && even) return Parity::inhomogeneous;
  return odd ? Parity::odd : Parity::even;
}

GrassmannElement GrassmannElement::body() const {
  GrassmannElement r(alg_);
  for (const auto& [mono, c] : terms_)
    if (mono.odd == 0) r.terms_.emplace(mono, c);
  return r;
}

Scalar GrassmannElement::constant_term() const {
  return coefficient(Monomial{std::vector<int>(alg_->even_count(), 0), 0});
}

Scalar GrassmannElement::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar(0) : it->second;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  check_same(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  check_same(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& o) { return *this = *this * o; }

GrassmannElement& GrassmannElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  Terms next;
  for (auto& [mono, v] : terms_) {
    Scalar p = v * c;
    if (!p.is_zero()) next.emplace(mono, std::move(p));
  }
  terms_ = std::move(next);
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  a.check_same(b);
  GrassmannElement r(a.alg_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.odd & mb.odd) continue;
      Monomial mono{ma.exps, ma.odd | mb.odd};
      for (std::size_t k = 0; k < mono.exps.size(); ++k) mono.exps[k] += mb.exps[k];
      Scalar c = ca * cb;
      if (merge_sign(ma.odd, mb.odd) < 0) c = -c;
      r.add_term(mono, c);
    }
  }
  return r;
}

bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
  a.check_same(b);
  return (a - b).is_zero();
}

GrassmannElement GrassmannElement::inverse() const {
  if (parity() != Parity::even) throw AlgebraError("only even elements can be inverted");
  GrassmannElement b = body();
  if (b.terms_.size() != 1) throw AlgebraError("not invertible: body is not a unit");
  const auto& [bmono, bc] = *b.terms_.begin();
  if (bc.is_zero()) throw AlgebraError("not invertible");
  Monomial inv_mono{bmono.exps, 0};
  for (int& e : inv_mono.exps) e = -e;
  GrassmannElement binv(alg_);
  binv.terms_.emplace(inv_mono, bc.inverse());
  // x = b (1 + u) with u nilpotent
  GrassmannElement u = (*this - b) * binv;
  GrassmannElement sum(alg_, Scalar(1));
  GrassmannElement power(alg_, Scalar(1));
  GrassmannElement neg_u = -u;
  for (std::size_t k = 0; k <= alg_->odd_count(); ++k) {
    power *= neg_u;
    if (power.is_zero()) break;
    sum += power;
  }
  return binv * sum;
}

GrassmannElement GrassmannElement::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  GrassmannElement r(alg_, Scalar(1));
  GrassmannElement base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

GrassmannElement GrassmannElement::conj_coefficients() const {
  GrassmannElement r(alg_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c.conj());
  return r;
}

GrassmannElement GrassmannElement::converted(const FieldOptions& opts) const {
  GrassmannElement r(alg_);
  for (const auto& [mono, c] : terms_) r.add_term(mono, c.converted(opts));
  return r;
}

GrassmannElement GrassmannElement::star() const {
  const GeneratorSet& g = *alg_;
  if (!g.has_star) throw AlgebraError("star requires a declared pairing");
  std::vector<GrassmannElement> odd_img;
  odd_img.reserve(g.odd_count());
  for (std::size_t k = 0; k < g.odd_count(); ++k) {
    auto rule = g.odd_star_rules.find(static_cast<int>(k));
    odd_img.push_back(rule != g.odd_star_rules.end() ? GrassmannElement(alg_, rule->second)
                                                     : generator(alg_, g.odd_pairing[k]));
  }
  std::vector<GrassmannElement> even_img;
  std::vector<std::optional<GrassmannElement>> even_img_inv(g.even_count());
  even_img.reserve(g.even_count());
  for (std::size_t k = 0; k < g.even_count(); ++k) {
    auto rule = g.even_star_rules.find(static_cast<int>(k));
    even_img.push_back(rule != g.even_star_rules.end() ? GrassmannElement(alg_, rule->second)
                                                       : even_variable(alg_, g.even_pairing[k]));
  }
  GrassmannElement result(alg_);
  for (const auto& [mono, c] : terms_) {
    GrassmannElement term(alg_, c.conj());
    for (std::size_t k = 0; k < g.even_count(); ++k) {
      int e = mono.exps[k];
      if (e == 0) continue;
      if (e > 0) {
        term *= even_img[k].pow(e);
      } else {
        if (!even_img_inv[k]) even_img_inv[k] = even_img[k].inverse();
        term *= even_img_inv[k]->pow(-e);
      }
    }
    for (std::uint32_t bits = mono.odd; bits != 0; bits &= bits - 1) term *= odd_img[std::countr_zero(bits)];
    result += term;
  }
  return result;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  const GeneratorSet& g = *alg_;
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < g.even_count(); ++k) {
      if (mono.exps[k] == 0) continue;
      factors.push_back(g.even_names[k] + (mono.exps[k] == 1 ? "" : "^" + std::to_string(mono.exps[k])));
    }
    for (std::uint32_t bits = mono.odd; bits != 0; bits &= bits - 1)
      factors.push_back(g.odd_names[std::countr_zero(bits)]);
    bool unit = c.is_one() && !factors.empty();
    if (!unit) os << "(" << c.to_string() << ")";
    for (std::size_t k = 0; k < factors.size(); ++k) os << ((k == 0 && unit) ? "" : "*") << factors[k];
  }
  return os.str();
}

}  // namespace spw
