#ifndef FLATSPEC_FAMILIES_HPP_
#define FLATSPEC_FAMILIES_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flatspec/crystal.hpp"

namespace flatspec {

inline constexpr int kDefaultKnCap = 8;

/// The n x n {0, 1/2} array whose column i holds the translation c_i of the
/// generator C_i L_{c_i} (C_i = diag with -1 in slot i), the last column being
/// the translation of C_1 ... C_{n-1}.
///
/// Valid arrays have 1/2 on the subdiagonal and in the corner (n,n), zeros on
/// the rest of the diagonal and below the subdiagonal, and an even number of
/// 1/2's in every row. The free entries are (i,j) with i < j < n.
class GhwArray {
 public:
  GhwArray() = default;
  explicit GhwArray(int n) : n_(n), half_(static_cast<std::size_t>(n) * n, 0) {}

  /// Array number `index` of the family, free entries read row by row with the
  /// first one as the most significant bit. Index 0 is K_n.
  static GhwArray from_index(int n, std::uint64_t index);
  /// From explicit entries, each 0 or 1/2 mod 1. Does not validate.
  static GhwArray from_entries(const std::vector<std::vector<Rational4>>& entries);

  int dim() const { return n_; }
  bool half(int i, int j) const { return half_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  void set_half(int i, int j, bool v) { half_[static_cast<std::size_t>(i) * n_ + j] = v; }
  Rational4 entry(int i, int j) const { return Rational4::from_quarters(half(i, j) ? 2 : 0); }

  /// Messages for every violated invariant; empty iff valid.
  std::vector<std::string> violations() const;
  void validate() const;

  /// Inverse of from_index for valid arrays.
  std::uint64_t index() const;

  friend bool operator==(const GhwArray&, const GhwArray&) = default;
  friend auto operator<=>(const GhwArray&, const GhwArray&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> half_;
};

/// (n-1)(n-2)/2
int kn_free_parameter_count(int n);

/// Gamma_{j,h} = <B_{j,h} L_{e_n/2}, Z^n> with B_{j,h} = diag(J x j, -1 x h, 1 x l).
BieberbachGroup z2_group(int n, int j, int h);

/// All Gamma_{j,h}, 0 <= j <= (n-1)/2, 0 <= h < n - 2j, j + h != 0, ordered by
/// (j, h).
std::vector<BieberbachGroup> z2_family(int n);

/// (n - [(n-1)/2]) ([(n-1)/2] + 1) - 1
long z2_family_size(int n);

/// <diag(sign_columns[i]) L_{translations[i]}, Z^n>. Throws ValidationError
/// naming the failed check (cocycle or torsion).
BieberbachGroup diagonal_group(const std::vector<std::vector<int>>& sign_columns,
                               const std::vector<Translation>& translations,
                               std::string name = {});

/// Hantzsche-Wendt group in odd dimension n: generators B_i L_{b_i},
/// i = 1..n-1, where B_i fixes e_i and negates the other basis vectors.
BieberbachGroup hw_group(int n, const std::vector<Translation>& translations,
                         std::string name = {});

/// Three HW groups with pairwise distinct generator data in odd dimension
/// n >= 5. Dimension 3 has a single HW manifold; see the hw3 catalog entries.
std::vector<BieberbachGroup> hw_examples(int n);

BieberbachGroup torus(int n);

BieberbachGroup kn_group_from_array(const GhwArray& a);
std::vector<GhwArray> kn_arrays(int n, int cap = kDefaultKnCap);
std::vector<BieberbachGroup> kn_family(int n, int cap = kDefaultKnCap);

std::vector<std::string> catalog_names();
/// Throws ValidationError for unknown names.
BieberbachGroup catalog(std::string_view name);

/// Catalog names plus the parametric references torus/<n>, z2/<n>/<j>/<h>,
/// kn/<n>/<index> and hw/<n>/<index>.
BieberbachGroup resolve_group(std::string_view ref);

}  // namespace flatspec

#endif  // FLATSPEC_FAMILIES_HPP_
