#ifndef FLATSPEC_LATTICE_HPP_
#define FLATSPEC_LATTICE_HPP_

#include <cstddef>
#include <vector>

#include "flatspec/signed_permutation.hpp"

namespace flatspec {

inline constexpr long kDefaultShellCap = 10000;

/// Shell cap from FLATSPEC_SHELL_CAP, or kDefaultShellCap when unset.
long shell_cap_from_env();

/// All v in Z^n with |v|^2 = norm_sq, lexicographically ordered. The cubic
/// lattice is self-dual, so these are also the dual-lattice shells.
struct Shell {
  int dim = 0;
  long norm_sq = 0;
  std::vector<IntVector> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// Throws ResourceError if norm_sq exceeds cap.
Shell shell_vectors(int n, long norm_sq, long cap = kDefaultShellCap);

/// Vectors of the shell fixed by B, in shell order.
std::vector<IntVector> fixed_vectors(const Shell& shell, const SignedPermutation& B);

/// dim ker(B - Id): the number of cycles of B with sign product +1.
int fixed_space_dim(const SignedPermutation& B);

}  // namespace flatspec

#endif  // FLATSPEC_LATTICE_HPP_
