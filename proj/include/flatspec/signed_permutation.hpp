#ifndef FLATSPEC_SIGNED_PERMUTATION_HPP_
#define FLATSPEC_SIGNED_PERMUTATION_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "flatspec/numeric.hpp"

namespace flatspec {

using IntVector = std::vector<int>;
using Translation = std::vector<Rational4>;

/// One cycle of the underlying permutation together with the product of the
/// signs met along it. For a positive cycle, `weights` holds the +-1 entries
/// of the (unique up to scale) vector it fixes; empty otherwise.
struct SignedCycle {
  std::vector<int> indices;  // i0 -> i1 -> ... in the order B visits them
  int sign_product = 1;
  std::vector<int> weights;
};

/// Orthogonal matrix stabilising Z^n: a permutation matrix with signs.
///
/// Column convention: B e_j = signs[j] * e_{perm[j]} (0-based internally).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  static SignedPermutation identity(int n);
  static SignedPermutation diagonal(std::span<const int> signs);
  /// Reads a dense +-1/0 matrix given row by row; throws ValidationError if it
  /// is not a signed permutation matrix.
  static SignedPermutation from_matrix(const std::vector<std::vector<int>>& rows);
  /// Block-diagonal sum in the given order.
  static SignedPermutation direct_sum(std::span<const SignedPermutation> blocks);

  int dim() const { return static_cast<int>(perm_.size()); }
  int image(int j) const { return perm_[j]; }
  int sign(int j) const { return signs_[j]; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  /// Matrix entry (row, col).
  int entry(int row, int col) const { return perm_[col] == row ? signs_[col] : 0; }

  IntVector apply(std::span<const int> v) const;
  Translation apply(std::span<const Rational4> v) const;
  bool fixes(std::span<const int> v) const;

  SignedPermutation inverse() const;
  int determinant() const;
  long order() const;
  bool is_identity() const;
  bool is_diagonal() const;
  std::vector<SignedCycle> cycles() const;

  std::string str() const;

  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

}  // namespace flatspec

#endif  // FLATSPEC_SIGNED_PERMUTATION_HPP_
