#pragma once

// Sections t^m theta^a eta^b of the function superalgebra, matrix
// coefficients of representations, and Peter-Weyl expansion.

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "spw/reps.hpp"

namespace spw {

inline constexpr unsigned kTheta = 1;
inline constexpr unsigned kEta = 2;

/// Finite sum of c * t^m * (odd monomial). The odd monomial is a bitmask
/// over {theta, eta} in the order theta < eta; s11 sections only use theta.
class Section {
 public:
  using Key = std::pair<long, unsigned>;

  explicit Section(AlgebraTag group = AlgebraTag::su11) : group_(group) {}
  static Section monomial(AlgebraTag group, long m, unsigned mask, const Scalar& c = Scalar(1));

  AlgebraTag group() const { return group_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coefficient(long m, unsigned mask) const;
  /// Adds c t^m mono; zero results are dropped.
  void add(long m, unsigned mask, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  Section operator-() const;
  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  Section& operator*=(const Scalar& c);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(Section a, const Scalar& c) { return a *= c; }
  friend Section operator*(const Scalar& c, Section a) { return a *= c; }
  friend bool operator==(const Section& a, const Section& b);

 private:
  AlgebraTag group_;
  std::map<Key, Scalar> terms_;
};

/// Entry (i, j) of diag(t^{m_i}) (1 + theta rho(U))(1 + eta rho(S)) for su11,
/// or diag(t^{m_i}) (1 + theta rho(Z)) for s11. Validates rep first.
std::map<std::pair<std::size_t, std::size_t>, Section> matrix_coefficients(const Representation& rep);

struct RepLabel {
  enum class Kind { trivial, adjoint, V, pi_plus, pi_minus };
  Kind kind = Kind::trivial;
  long m = 0;

  std::string to_string() const;
  friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

/// Parses "trivial", "adjoint", "V(m)", "pi(m,+)", "pi(m,-)".
RepLabel parse_rep_label(const std::string& text);

/// The representation a label names; "adjoint" is Ad(SU(1|1)) for su11 and W for s11.
Representation labeled_representation(AlgebraTag group, const RepLabel& label, const FieldOptions& opts = {});

using CoefficientKey = std::tuple<RepLabel, std::size_t, std::size_t>;
using Coefficients = std::map<CoefficientKey, Scalar>;

struct ExpansionResult {
  AlgebraTag group = AlgebraTag::su11;
  Coefficients coefficients;  // zero coefficients omitted
  Section residual;
};

/// Expresses f in the matrix coefficients of pi_m^+ (su11) or V_m (s11) for
/// m != 0, and of the trivial and adjoint representations at weight 0.
/// Components outside that span go to the residual.
ExpansionResult expand(const Section& f, const FieldOptions& opts = {});

Section reconstruct(AlgebraTag group, const Coefficients& coefficients, const FieldOptions& opts = {});

}  // namespace spw
