#pragma once

// Seeded random data for property checks. Draws are taken modulo the range
// from a 64-bit Mersenne twister so streams are identical across platforms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spw/grassmann.hpp"
#include "spw/reps.hpp"
#include "spw/supermatrix.hpp"

namespace spw {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

/// (a + b i) / c with |a|, |b| <= bound and 1 <= c <= den_bound.
GaussianRational random_gaussian(Rng& rng, long bound = 3, long den_bound = 2);

/// Random element of the given parity over an odd-only algebra; each
/// admissible monomial is present with probability 1/2.
GrassmannElement random_element(Rng& rng, const Algebra& alg, Parity parity);

/// Random even invertible 1|1 supermatrix (nonzero bodies on the diagonal).
SuperMatrix random_even_invertible_11(Rng& rng, const Algebra& alg);

/// Random invertible matrix that is block diagonal on the (weight, parity)
/// classes of rep.basis. With `extended`, entries at weight m != 0 are
/// c0 + c1 sqrt(-i m).
Matrix random_even_invertible(Rng& rng, const Representation& rep, bool extended = false);

/// change_basis by a random even invertible matrix, then a random permutation.
Representation scramble(Rng& rng, const Representation& rep, bool extended = false);

struct RandomSum {
  Representation rep;
  std::vector<std::string> labels;  // sorted, as DecompositionReport::labels() would print them
};

/// Direct sum of 1..max_blocks constructor blocks with weights in [-bound, bound].
RandomSum random_block_sum(Rng& rng, AlgebraTag algebra, std::size_t max_blocks = 8, long bound = 4);

}  // namespace spw
