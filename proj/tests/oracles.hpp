// Independent brute-force reference implementations used by the tests.
#ifndef FLATSPEC_TESTS_ORACLES_HPP_
#define FLATSPEC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "flatspec/flatspec.hpp"

namespace oracle {

using flatspec::Integer;
using flatspec::IntVector;
using flatspec::SignedPermutation;

/// Every integer vector in the box [-r, r]^n with squared norm N, sorted.
inline std::vector<IntVector> box_shell(int n, long N) {
  const int r = static_cast<int>(std::sqrt(static_cast<double>(N))) + 1;
  std::vector<IntVector> out;
  IntVector v(n, -r);
  while (true) {
    long s = 0;
    for (int x : v)
      s += static_cast<long>(x) * x;
    if (s == N)
      out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == r)
      v[k--] = -r;
    if (k < 0)
      break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// r_n(N) through the theta-series convolution r_n = r_1 * r_{n-1}.
inline std::vector<long> theta_counts(int n, long max_n) {
  std::vector<long> one(max_n + 1, 0);
  for (long k = 0; k * k <= max_n; ++k)
    one[k * k] = k == 0 ? 1 : 2;
  std::vector<long> acc(max_n + 1, 0);
  acc[0] = 1;
  for (int d = 0; d < n; ++d) {
    std::vector<long> next(max_n + 1, 0);
    for (long a = 0; a <= max_n; ++a)
      for (long b = 0; a + b <= max_n; ++b)
        next[a + b] += acc[a] * one[b];
    acc = std::move(next);
  }
  return acc;
}

/// Dense integer matrix of a signed permutation.
inline std::vector<std::vector<int>> dense(const SignedPermutation& B) {
  std::vector<std::vector<int>> m(B.dim(), std::vector<int>(B.dim(), 0));
  for (int j = 0; j < B.dim(); ++j)
    m[B.image(j)][j] = B.sign(j);
  return m;
}

/// Fixed shell vectors found by applying the dense matrix.
inline std::vector<IntVector> dense_fixed(const std::vector<IntVector>& shell,
                                          const SignedPermutation& B) {
  auto m = dense(B);
  std::vector<IntVector> out;
  for (const auto& v : shell) {
    bool fixed = true;
    for (int i = 0; i < B.dim() && fixed; ++i) {
      int s = 0;
      for (int j = 0; j < B.dim(); ++j)
        s += m[i][j] * v[j];
      fixed = s == v[i];
    }
    if (fixed)
      out.push_back(v);
  }
  return out;
}

/// Does the coset of gamma contain an element of finite order? Checks
/// sum_{i<m} B^i (b + lambda) = 0 over lambda in {-1, 0, 1}^n, which covers
/// every cycle since |w.b| < cycle length for reduced translations.
inline bool coset_has_torsion(const flatspec::IsometryElement& g) {
  const int n = g.dim();
  if (g.linear.is_identity())
    return false;
  const long m = g.linear.order();
  std::vector<int> lam(n, -1);
  while (true) {
    flatspec::Translation c(n);
    for (int i = 0; i < n; ++i)
      c[i] = g.translation[i] + flatspec::Rational4(lam[i]);
    flatspec::Translation sum(n), cur = c;
    for (long i = 0; i < m; ++i) {
      for (int k = 0; k < n; ++k)
        sum[k] += cur[k];
      cur = g.linear.apply(std::span<const flatspec::Rational4>(cur));
    }
    if (std::all_of(sum.begin(), sum.end(), [](flatspec::Rational4 r) { return r == 0; }))
      return true;
    int k = n - 1;
    while (k >= 0 && lam[k] == 1)
      lam[k--] = -1;
    if (k < 0)
      return false;
    ++lam[k];
  }
}

inline SignedPermutation random_signed_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n), signs(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& s : signs)
    s = (rng() & 1) ? 1 : -1;
  return SignedPermutation(perm, signs);
}

/// Generic isomorphism test over all vertex permutations.
inline bool brute_isomorphic(const flatspec::GhwGraph& a, const flatspec::GhwGraph& b) {
  if (a.size() != b.size())
    return false;
  const int n = a.size();
  if (a.edges().size() != b.edges().size())
    return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = a.has_edge(i, j) == b.has_edge(p[i], p[j]);
    if (ok)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle

#endif  // FLATSPEC_TESTS_ORACLES_HPP_
