#pragma once

// Named representations of Lie(S^{1|1}) and su(1|1), and constructive
// decomposition into them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spw/liealg.hpp"

namespace spw {

enum class PiSign { plus, minus };

/// Super weight space V_m of S^{1|1}: basis (v0 | v1), rho(Z) = s [[0,1],[1,0]], s = sqrt(-i m).
Representation make_V_m(long m, const FieldOptions& opts = {});

enum class WeightZeroKind { W, PiW, trivial };

/// W: rho(Z) = [[0,1],[0,0]] on (w0 | w1), kernel 1|0.
/// PiW: rho(Z) = [[0,0],[1,0]] on (w0 | w1), kernel 0|1.
/// trivial: p even then q odd basis vectors, rho(Z) = 0.
Representation make_weight_zero_s11(WeightZeroKind kind, std::size_t p = 0, std::size_t q = 0);

/// pi_m^{+-}: weight m on C^{1|1}, U = s [[0,1],[1,0]], S = [[0, -+m/s], [+-m/s, 0]].
Representation make_pi_m(long m, PiSign sign, const FieldOptions& opts = {});

/// Ad(SU(1|1)) on C^{1|2}: weight 0, U = E_12, S = E_13.
Representation make_adjoint_su11();

/// Trivial su(1|1) representation of superdimension p|q (weight 0).
Representation make_trivial_su11(std::size_t p, std::size_t q);

Representation direct_sum(const std::vector<Representation>& parts);

/// Same module in a new basis: generators become Q^{-1} X Q. Q must be
/// invertible, even and weight preserving with respect to rep.basis.
Representation change_basis(const Representation& rep, const Matrix& q);

/// Reorders basis vectors: new basis vector k is old basis vector perm[k].
Representation permute_basis(const Representation& rep, const std::vector<std::size_t>& perm);

struct BlockLabel {
  enum class Kind { V, trivial, Ad, PiAd, pi_plus, pi_minus, weight_zero };
  Kind kind = Kind::trivial;
  long m = 0;
  std::size_t p = 0;  // superdimension for trivial / weight_zero blocks
  std::size_t q = 0;

  std::string to_string() const;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct DecompositionBlock {
  BlockLabel label;
  std::vector<std::size_t> columns;  // columns of basis_change spanning the block
};

struct DecompositionReport {
  AlgebraTag algebra = AlgebraTag::s11;
  std::vector<DecompositionBlock> blocks;
  /// Columns are the new basis expressed in the input basis; block order.
  Matrix basis_change;
  /// Block-diagonal model assembled from the constructors.
  Representation model;
  /// su11 only: the weight-zero part, left unclassified.
  std::optional<Representation> weight_zero;

  std::map<long, std::size_t> v_counts;
  std::size_t trivial_even = 0;
  std::size_t trivial_odd = 0;
  std::size_t ad = 0;
  std::size_t pi_ad = 0;
  std::map<long, std::size_t> pi_plus;
  std::map<long, std::size_t> pi_minus;

  /// Sorted label strings, one per block.
  std::vector<std::string> labels() const;
};

/// Jordan-type splitting of a weight-zero S^{1|1} module with rho(Z)^2 = 0.
DecompositionReport decompose_weight_zero_s11(const Representation& rep, const FieldOptions& opts = {});
DecompositionReport decompose_s11(const Representation& rep, const FieldOptions& opts = {});
DecompositionReport decompose_su11(const Representation& rep, const FieldOptions& opts = {});
DecompositionReport decompose(const Representation& rep, const FieldOptions& opts = {});

/// Diagnostics for the report invariant: basis_change is invertible, its
/// columns are homogeneous of the model's parity and weight, and
/// conjugating each generator reproduces the model. Empty when ok.
std::vector<std::string> check_report(const Representation& rep, const DecompositionReport& report);

}  // namespace spw
