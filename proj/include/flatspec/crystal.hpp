#ifndef FLATSPEC_CRYSTAL_HPP_
#define FLATSPEC_CRYSTAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatspec/signed_permutation.hpp"

namespace flatspec {

inline constexpr long kDefaultHolonomyCap = 1L << 16;

/// gamma = B L_b, acting by x -> B(x + b). The translation is kept reduced
/// mod Z^n, so each coordinate lies in {0, 1/4, 1/2, 3/4}.
struct IsometryElement {
  SignedPermutation linear;
  Translation translation;

  IsometryElement() = default;
  IsometryElement(SignedPermutation B, Translation b);

  static IsometryElement identity(int n);

  int dim() const { return linear.dim(); }
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const IsometryElement&, const IsometryElement&) = default;
  friend auto operator<=>(const IsometryElement&, const IsometryElement&) = default;
};

/// (B_a L_{b_a})(B_b L_{b_b}) = B_a B_b L_{B_b^{-1} b_a + b_b}, reduced mod Z^n.
IsometryElement compose(const IsometryElement& a, const IsometryElement& b);

/// A crystallographic group with translation lattice Z^n, stored as one
/// representative of each coset of Z^n (identity first). The representative
/// set is closed under composition mod Z^n; torsion-freeness is not implied.
class SpaceGroup {
 public:
  SpaceGroup() = default;

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<IsometryElement>& representatives() const { return reps_; }
  const std::vector<IsometryElement>& generators() const { return gens_; }
  long holonomy_order() const { return static_cast<long>(reps_.size()); }

  /// Representative with the given linear part, or nullptr.
  const IsometryElement* find(const SignedPermutation& B) const;

  friend SpaceGroup expand_holonomy(std::span<const IsometryElement>, int, long);

 private:
  int dim_ = 0;
  std::string name_;
  std::vector<IsometryElement> gens_;
  std::vector<IsometryElement> reps_;
};

/// Breadth-first closure of the generators' linear parts modulo Z^n.
/// Throws ValidationError on a cocycle inconsistency (two products with the
/// same linear part but different translations mod 1) and ResourceError when
/// the holonomy grows past cap.
SpaceGroup expand_holonomy(std::span<const IsometryElement> generators, int dim,
                           long cap = kDefaultHolonomyCap);

/// A SpaceGroup known to be torsion-free.
class BieberbachGroup : public SpaceGroup {
 public:
  /// Throws ValidationError naming an element with a fixed point if the group
  /// has torsion.
  static BieberbachGroup certify(SpaceGroup g);

  /// Expand and certify in one step.
  static BieberbachGroup from_generators(std::span<const IsometryElement> generators, int dim,
                                         std::string name = {});

 private:
  explicit BieberbachGroup(SpaceGroup g) : SpaceGroup(std::move(g)) {}
};

/// The representative whose coset contains an element of finite order, if
/// any. Criterion: gamma = B L_b, B of order m, has torsion in gamma Z^n iff
/// the projection of b onto ker(B - Id) lies in the projection of Z^n, i.e.
/// w.b is an integer for the fixed vector w of every positive cycle of B.
std::optional<IsometryElement> torsion_witness(const SpaceGroup& g);
bool is_torsion_free(const SpaceGroup& g);

/// Full multiplication-table check of closure and cocycle consistency.
bool check_closure(const SpaceGroup& g);

enum class HolonomyKind { ElementaryAbelian2, Cyclic4, Other };

struct HolonomyClass {
  HolonomyKind kind = HolonomyKind::Other;
  long order = 1;
  int rank = 0;        // k with |F| = 2^k; meaningful for ElementaryAbelian2 only
  bool abelian = true;
  std::string name;    // e.g. "trivial", "Z2^3", "Z4xZ2", "D4"; empty when |F| > 16 and not Z2^k
};

HolonomyClass classify_holonomy(const SpaceGroup& g);
std::string to_string(HolonomyKind k);

bool is_diagonal_type(const SpaceGroup& g);
bool is_orientable(const SpaceGroup& g);

/// Deterministic text of the sorted representative set.
std::string canonical_key(const SpaceGroup& g);

struct ValidationReport {
  bool closure = false;
  bool cocycle = false;
  bool torsion_free = false;
  long holonomy_order = 0;
  HolonomyClass holonomy;
  bool diagonal_type = false;
  bool orientable = false;
  std::vector<std::string> errors;

  bool accepted() const { return closure && cocycle && torsion_free; }
};

/// Runs every structural check, recording failures instead of throwing.
ValidationReport validate(std::span<const IsometryElement> generators, int dim);

}  // namespace flatspec

#endif  // FLATSPEC_CRYSTAL_HPP_
