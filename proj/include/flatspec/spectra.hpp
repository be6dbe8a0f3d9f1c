#ifndef FLATSPEC_SPECTRA_HPP_
#define FLATSPEC_SPECTRA_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "flatspec/crystal.hpp"
#include "flatspec/lattice.hpp"
#include "flatspec/numeric.hpp"

namespace flatspec {

// Everything here is indexed by the integer squared norm N of the lattice
// shell; the corresponding Laplace eigenvalue is 4 pi^2 N.

/// K_p^n(x) = sum_t (-1)^t C(x, t) C(n - x, p - t), for 0 <= p, x <= n.
Integer krawtchouk(int n, int p, int x);

struct KrawtchoukTable {
  int n = 0;
  std::vector<std::vector<Integer>> values;  // values[p][x]

  const Integer& operator()(int p, int x) const { return values[p][x]; }
};

KrawtchoukTable krawtchouk_table(int n);

/// Traces of B on all exterior powers: coefficient p of det(Id + tB), built
/// as a product over the signed cycles of B.
std::vector<Integer> exterior_traces(const SignedPermutation& B);
Integer trace_p(const SignedPermutation& B, int p);

/// Same trace computed by letting B act on the basis e_{i1} ^ ... ^ e_{ip}.
/// Test oracle; throws ResourceError for n > 12.
Integer trace_p_oracle(const SignedPermutation& B, int p);

/// sum over v in the shell with Bv = v of e^{-2 pi i v.b}.
GaussianInt character_sum(const IsometryElement& gamma, const Shell& shell);
GaussianInt character_sum(const IsometryElement& gamma, long norm_sq, long cap = kDefaultShellCap);

struct MultiplicityRow {
  std::string group;
  long norm_sq = 0;
  std::vector<Integer> d;  // d[p], 0 <= p <= n
  Integer d_f = 0;
  Integer d_e = 0;
  Integer d_o = 0;
};

/// All d_p at one shell, plus the full/even/odd sums. Throws IntegrityError if
/// an averaged character sum is not a nonnegative integer.
MultiplicityRow multiplicities(const BieberbachGroup& g, const Shell& shell);
MultiplicityRow multiplicities(const BieberbachGroup& g, long norm_sq, long cap = kDefaultShellCap);

Integer d_p(const BieberbachGroup& g, int p, long norm_sq, long cap = kDefaultShellCap);
Integer d_f(const BieberbachGroup& g, long norm_sq, long cap = kDefaultShellCap);
Integer d_e(const BieberbachGroup& g, long norm_sq, long cap = kDefaultShellCap);
Integer d_o(const BieberbachGroup& g, long norm_sq, long cap = kDefaultShellCap);

/// beta_p = d_p at N = 0.
Integer betti(const BieberbachGroup& g, int p);
std::vector<Integer> betti_numbers(const BieberbachGroup& g);

struct TheoremCheckEntry {
  long norm_sq = 0;
  Integer shell_size = 0;
  Integer d_f = 0;
  Integer d_e = 0;
  Integer d_o = 0;
  Integer expected_f = 0;
  Integer expected_half = 0;
  bool pass = false;
};

struct TheoremReport {
  std::string group;
  int n = 0;
  int k = 0;
  std::vector<TheoremCheckEntry> entries;

  bool passed() const;
  int failures() const;
};

/// Checks d_f = 2^{n-k}|shell| and d_e = d_o = 2^{n-k-1}|shell| by direct
/// summation for N = 0..max_norm_sq. Throws RangeError unless the holonomy is
/// Z_2^k.
TheoremReport theorem_check(const BieberbachGroup& g, long max_norm_sq,
                            long cap = kDefaultShellCap);

struct CompareMode {
  enum class Kind { Degree, Full, Even, Odd, AllDegrees };
  Kind kind = Kind::Full;
  int degree = 0;

  /// "0".."n", "p=2", "f", "e", "o", "functions" (degree 0) or "all".
  static CompareMode parse(std::string_view text);
  std::string str() const;
};

struct SpectrumVerdict {
  bool equal = true;
  long norm_sq = -1;      // first distinguishing N, -1 when equal
  std::string mode;       // e.g. "p=2" or "f"
  Integer value1 = 0;
  Integer value2 = 0;
  long max_norm_sq = 0;
};

/// Scans N = 0..max_norm_sq (and p ascending within N for "all").
SpectrumVerdict compare_spectra(const BieberbachGroup& g1, const BieberbachGroup& g2,
                                const CompareMode& mode, long max_norm_sq,
                                long cap = kDefaultShellCap);

/// Closed forms for the Z_2 family member Gamma_{j,h} in dimension n = 2j+h+l.
struct Z2ClosedForms {
  Integer d_p_at_1 = 0;  // C(n,p) n + K_p^n(j+h) (l-2)
  Integer d_p_at_2 = 0;  // 2 C(n,p) C(n,2) + K_p^n(j+h) (j + (l-1)(l-4))
  Integer d_0_at_1 = 0;  // n + l - 2
  Integer d_0_at_2 = 0;  // n(n-1) + j + (l-1)(l-4)
};

Z2ClosedForms z2_closed_forms(int j, int h, int n, int p);

}  // namespace flatspec

#endif  // FLATSPEC_SPECTRA_HPP_
