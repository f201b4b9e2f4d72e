#pragma once

// Supercommutative coefficient algebras: odd generators (exterior algebra,
// monomials as bitmasks) optionally tensored with Laurent polynomials in
// even variables, together with an antilinear star automorphism.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spw/scalar.hpp"

namespace spw {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Odd part as a bitmask over generator indices (bit k = generator k, the
/// product taken in ascending index order); even part as Laurent exponents.
struct Monomial {
  std::vector<int> exps;
  std::uint32_t odd = 0;

  int odd_degree() const;
  auto operator<=>(const Monomial&) const = default;
};

using Terms = std::map<Monomial, Scalar>;

enum class Parity { even, odd, inhomogeneous };

const char* parity_name(Parity p);

/// Generators and the star structure on them.
///
/// `odd_pairing` / `even_pairing` are involutions on indices (fixed points
/// are real generators). A star rule overrides the image of one generator
/// with an arbitrary element; rules are how constrained coordinate rings
/// such as a abar (1 + i beta betabar) = 1 are presented with abar eliminated.
struct GeneratorSet {
  std::vector<std::string> odd_names;
  std::vector<std::string> even_names;
  bool has_star = false;
  std::vector<int> odd_pairing;
  std::vector<int> even_pairing;
  std::map<int, Terms> odd_star_rules;
  std::map<int, Terms> even_star_rules;

  std::size_t odd_count() const { return odd_names.size(); }
  std::size_t even_count() const { return even_names.size(); }
  int odd_index(const std::string& name) const;
  int even_index(const std::string& name) const;
  bool same_structure(const GeneratorSet& o) const;
};

using Algebra = std::shared_ptr<const GeneratorSet>;

/// Validates names, pairings and rules; the returned handle is shared by
/// every element of the algebra.
Algebra make_algebra(GeneratorSet gens);

/// Odd generators only; `pairs` lists conjugate index pairs, and when
/// `with_star` is set every unpaired generator is real.
Algebra grassmann_algebra(std::vector<std::string> odd_names, std::vector<std::pair<int, int>> pairs = {},
                          bool with_star = false);

/// The 0-generator algebra: plain scalars with complex conjugation as star.
const Algebra& scalar_algebra();

class GrassmannElement {
 public:
  explicit GrassmannElement(Algebra alg);
  GrassmannElement(Algebra alg, Scalar c);
  GrassmannElement(Algebra alg, Terms terms);

  static GrassmannElement generator(const Algebra& alg, int k);
  static GrassmannElement generator(const Algebra& alg, const std::string& name);
  static GrassmannElement even_variable(const Algebra& alg, int k, int exp = 1);
  static GrassmannElement even_variable(const Algebra& alg, const std::string& name, int exp = 1);

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Parity parity() const;
  /// Terms without odd generators.
  GrassmannElement body() const;
  /// Coefficient of the unit monomial.
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& mono) const;

  GrassmannElement star() const;
  GrassmannElement inverse() const;
  GrassmannElement pow(int n) const;
  GrassmannElement conj_coefficients() const;
  GrassmannElement converted(const FieldOptions& opts) const;

  std::string to_string() const;

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GrassmannElement& o);
  GrassmannElement& operator*=(const Scalar& c);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(GrassmannElement a, const Scalar& c) { return a *= c; }
  friend GrassmannElement operator*(const Scalar& c, GrassmannElement a) { return a *= c; }
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b);

 private:
  void check_same(const GrassmannElement& o) const;
  void add_term(const Monomial& mono, const Scalar& c);

  Algebra alg_;
  Terms terms_;
};

/// Sign of ascending-order merge of two disjoint odd bitmasks.
int merge_sign(std::uint32_t a, std::uint32_t b);

}  // namespace spw
