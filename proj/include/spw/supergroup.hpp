#pragma once

// T-points of (C^{1|1})^x, SL(1|1), S^{1|1}, SU(1|1) and SU(1|1)_-,
// their real-structure involutions, and the factorization
// g = diag(t, star(t)^{-1}) (1 + theta U)(1 + eta S).

#include <string>
#include <vector>

#include "spw/supermatrix.hpp"

namespace spw {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [[a, beta], [gamma, d]] with a, d even and beta, gamma odd.
struct GL11Point {
  GrassmannElement a;
  GrassmannElement beta;
  GrassmannElement gamma;
  GrassmannElement d;

  SuperMatrix matrix() const;
  static GL11Point from_matrix(const SuperMatrix& m);
  const Algebra& algebra() const { return a.algebra(); }
  /// Throws GroupError when parities or bodies are wrong.
  void validate() const;

  friend bool operator==(const GL11Point& x, const GL11Point& y) {
    return x.a == y.a && x.beta == y.beta && x.gamma == y.gamma && x.d == y.d;
  }
};

/// A point (w, eta) of (C^{1|1})^x.
struct S11Point {
  GrassmannElement w;
  GrassmannElement eta;

  void validate() const;
  friend bool operator==(const S11Point& x, const S11Point& y) { return x.w == y.w && x.eta == y.eta; }
};

enum class GroupTag { sl11, su11, su11_minus };

const char* group_name(GroupTag g);
GroupTag parse_group(const std::string& name);

/// (w, eta) -> (star(w)^{-1}, i star(w)^{-2} star(eta)).
S11Point rho_s11(const S11Point& p);

/// [[a, beta], [gamma, d]] -> [[star(d)^{-1}, -i star(a)^{-2} star(gamma)],
///                             [-i star(a)^{-2} star(beta), star(a)^{-1}]].
GL11Point sigma_su(const GL11Point& g);

struct Membership {
  bool member = false;
  std::string diagnostic;  // empty for members, else the first violated relation
};

Membership membership(const GL11Point& g, GroupTag group);

/// The su(1|1) generators U = [[0,1],[-i,0]] and S = [[0,i],[-1,0]] as 1|1 supermatrices.
SuperMatrix su11_U(const Algebra& alg);
SuperMatrix su11_S(const Algebra& alg);

struct FactorizationTriple {
  GrassmannElement t;
  GrassmannElement theta;
  GrassmannElement eta;

  friend bool operator==(const FactorizationTriple& x, const FactorizationTriple& y) {
    return x.t == y.t && x.theta == y.theta && x.eta == y.eta;
  }
};

/// diag(t, star(t)^{-1}) (1 + theta U)(1 + eta S).
GL11Point defactorize(const FactorizationTriple& f);

/// Inverts defactorize on either isomer:
///   theta + i eta = a^{-1} beta,  theta - i eta = i d^{-1} gamma,  t = a (1 + theta eta).
/// Throws GroupError unless g is a member of su11 or su11_minus.
FactorizationTriple factorize(const GL11Point& g);

/// The closed-form candidate t = a(1 - (i/2) b star(b)), theta = (star(b) a + b star(a))/2,
/// eta = (star(b) a - b star(a))/2, where b is the beta of the given shape
/// (the (0,1) entry for su11, -i times it for su11_minus).
FactorizationTriple closed_form_candidate(const GL11Point& g, GroupTag shape);

// ---------------------------------------------------------------- generic points

/// Generic member of SU(1|1) (or the isomer) over Q(i)[a, 1/a] (x) Lambda[beta, betabar],
/// with star(a) rewritten to a^{-1}(1 -+ i beta betabar) so the defining constraint
/// holds identically.
struct GenericSU11 {
  Algebra algebra;
  GrassmannElement a;
  GrassmannElement beta;
  GL11Point point;
};

GenericSU11 generic_su11_point(GroupTag isomer = GroupTag::su11);

/// Two independent generic members over a shared ring (for closure checks).
std::pair<GL11Point, GL11Point> generic_su11_pair();

/// Generic SL(1|1) point: d, star(d), beta, gamma free, a = d + d^{-1} beta gamma.
GL11Point generic_sl11_point();

/// Generic (w, eta) with w, star(w), eta, star(eta) free.
S11Point generic_s11_point();

/// Generic factorization data on the image of the given isomer: star(t) = t^{-1},
/// theta and eta real (su11) or imaginary (su11_minus).
FactorizationTriple generic_triple(GroupTag isomer);

// ---------------------------------------------------------------- convention check

struct ShapeFinding {
  GroupTag shape;
  bool exact_round_trip = false;        // defactorize(factorize(g)) == g and the converse
  bool candidate_round_trip = false;    // defactorize(candidate(g)) == g
  bool t_matches = false;
  bool theta_matches = false;
  bool eta_matches = false;
  std::string theta_reality;            // "real", "imaginary" or "none"
  std::string eta_reality;
};

struct ConventionResolution {
  std::vector<ShapeFinding> findings;
  std::string outcome;
};

/// Runs the symbolic round-trip oracle for the closed-form candidate against
/// both isomer shapes.
ConventionResolution resolve_factorization_convention();

}  // namespace spw
