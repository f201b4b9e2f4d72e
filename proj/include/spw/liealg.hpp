#pragma once

// The Lie superalgebras Lie(S^{1|1}) = <C, Z> and su(1|1) = <C, U, S>, and
// finite-dimensional representations of them with C acting by weights.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spw/linalg.hpp"
#include "spw/supermatrix.hpp"

namespace spw {

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AlgebraTag { s11, su11 };

const char* algebra_name(AlgebraTag tag);
AlgebraTag parse_algebra(const std::string& name);
/// "Z" for s11; "U", "S" for su11.
const std::vector<std::string>& odd_generator_names(AlgebraTag tag);

struct BasisVector {
  int parity = 0;  // 0 even, 1 odd
  long weight = 0;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// rho(C) is implicit: diag(i * weight_j). Odd generators are explicit matrices.
struct Representation {
  AlgebraTag algebra = AlgebraTag::su11;
  std::vector<BasisVector> basis;
  std::map<std::string, Matrix> generators;

  std::size_t dim() const { return basis.size(); }
  std::pair<std::size_t, std::size_t> superdim() const;
  const Matrix& gen(const std::string& name) const;
  Matrix rho_C() const;
  /// floating if any generator entry is floating.
  ScalarKind scalar_kind() const;
  std::vector<std::size_t> indices(long weight, int parity) const;
  std::vector<std::size_t> indices(long weight) const;
  std::vector<long> weights() const;  // distinct, ascending
};

struct LieSuperAlgebra {
  AlgebraTag tag;
  std::vector<std::string> names;
  std::vector<int> parities;
  /// [X_i, X_j] = sum_k c_k X_k, every ordered pair present.
  std::map<std::pair<int, int>, std::vector<GaussianRational>> brackets;
  /// Defining matrices on C^{1|1} (su11 only), keyed by basis name.
  std::map<std::string, SuperMatrix> defining;
};

/// Throws RepresentationError if the stored constants fail their own checks.
LieSuperAlgebra builtin_algebra(AlgebraTag tag);

/// Super-antisymmetry and graded Jacobi on all basis triples; empty when ok.
std::vector<std::string> check_structure_constants(const LieSuperAlgebra& alg);
/// Compares supercommutators of the defining matrices with the table.
std::vector<std::string> check_defining_matrices(const LieSuperAlgebra& alg);

/// Empty when the representation satisfies every relation; otherwise one
/// message per violated relation and weight block.
std::vector<std::string> validate_representation(const Representation& rep);

/// Basis of {F even, weight preserving : F rho1(X) = rho2(X) F for all X}.
std::vector<Matrix> find_even_intertwiners(const Representation& rep1, const Representation& rep2);

}  // namespace spw
