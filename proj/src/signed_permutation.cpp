#include "flatspec/signed_permutation.hpp"

#include <numeric>
#include <sstream>

#include "flatspec/error.hpp"

namespace flatspec {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  const int n = dim();
  if (static_cast<int>(signs_.size()) != n)
    fail_validation("signed permutation: perm and signs have different lengths");
  std::vector<char> seen(n, 0);
  for (int j = 0; j < n; ++j) {
    if (perm_[j] < 0 || perm_[j] >= n || seen[perm_[j]])
      fail_validation("signed permutation: perm is not a bijection of 1.." + std::to_string(n));
    seen[perm_[j]] = 1;
    if (signs_[j] != 1 && signs_[j] != -1)
      fail_validation("signed permutation: signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return {std::move(p), std::vector<int>(n, 1)};
}

SignedPermutation SignedPermutation::diagonal(std::span<const int> signs) {
  std::vector<int> p(signs.size());
  std::iota(p.begin(), p.end(), 0);
  return {std::move(p), std::vector<int>(signs.begin(), signs.end())};
}

SignedPermutation SignedPermutation::from_matrix(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> perm(n, -1), signs(n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      fail_validation("matrix is not square");
    for (int j = 0; j < n; ++j) {
      int x = rows[i][j];
      if (x == 0)
        continue;
      if ((x != 1 && x != -1) || perm[j] != -1)
        fail_validation("matrix is not a signed permutation matrix");
      perm[j] = i;
      signs[j] = x;
    }
  }
  return {std::move(perm), std::move(signs)};
}

SignedPermutation SignedPermutation::direct_sum(std::span<const SignedPermutation> blocks) {
  std::vector<int> perm, signs;
  int offset = 0;
  for (const auto& b : blocks) {
    for (int j = 0; j < b.dim(); ++j) {
      perm.push_back(offset + b.perm_[j]);
      signs.push_back(b.signs_[j]);
    }
    offset += b.dim();
  }
  return {std::move(perm), std::move(signs)};
}

IntVector SignedPermutation::apply(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != dim())
    fail_range("apply: vector length does not match dimension");
  IntVector out(v.size());
  for (int j = 0; j < dim(); ++j)
    out[perm_[j]] = signs_[j] * v[j];
  return out;
}

Translation SignedPermutation::apply(std::span<const Rational4> v) const {
  if (static_cast<int>(v.size()) != dim())
    fail_range("apply: vector length does not match dimension");
  Translation out(v.size());
  for (int j = 0; j < dim(); ++j)
    out[perm_[j]] = signs_[j] * v[j];
  return out;
}

bool SignedPermutation::fixes(std::span<const int> v) const {
  for (int j = 0; j < dim(); ++j)
    if (v[perm_[j]] != signs_[j] * v[j])
      return false;
  return true;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.dim() != b.dim())
    fail_range("compose: dimension mismatch");
  std::vector<int> perm(a.dim()), signs(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    perm[j] = a.perm_[b.perm_[j]];
    signs[j] = a.signs_[b.perm_[j]] * b.signs_[j];
  }
  SignedPermutation r;
  r.perm_ = std::move(perm);
  r.signs_ = std::move(signs);
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.perm_.resize(dim());
  r.signs_.resize(dim());
  for (int j = 0; j < dim(); ++j) {
    r.perm_[perm_[j]] = j;
    r.signs_[perm_[j]] = signs_[j];
  }
  return r;
}

std::vector<SignedCycle> SignedPermutation::cycles() const {
  std::vector<SignedCycle> out;
  std::vector<char> seen(dim(), 0);
  for (int start = 0; start < dim(); ++start) {
    if (seen[start])
      continue;
    SignedCycle c;
    std::vector<int> w;
    int weight = 1;
    for (int i = start; !seen[i]; i = perm_[i]) {
      seen[i] = 1;
      c.indices.push_back(i);
      w.push_back(weight);
      weight *= signs_[i];
      c.sign_product *= signs_[i];
    }
    if (c.sign_product == 1)
      c.weights = std::move(w);
    out.push_back(std::move(c));
  }
  return out;
}

int SignedPermutation::determinant() const {
  int det = 1;
  for (const auto& c : cycles())
    det *= c.sign_product * ((c.indices.size() % 2 == 0) ? -1 : 1);
  return det;
}

long SignedPermutation::order() const {
  long m = 1;
  for (const auto& c : cycles()) {
    long k = static_cast<long>(c.indices.size()) * (c.sign_product == 1 ? 1 : 2);
    m = std::lcm(m, k);
  }
  return m;
}

bool SignedPermutation::is_identity() const {
  for (int j = 0; j < dim(); ++j)
    if (perm_[j] != j || signs_[j] != 1)
      return false;
  return true;
}

bool SignedPermutation::is_diagonal() const {
  for (int j = 0; j < dim(); ++j)
    if (perm_[j] != j)
      return false;
  return true;
}

std::string SignedPermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < dim(); ++j)
    os << (j ? " " : "") << (signs_[j] < 0 ? "-" : "+") << (perm_[j] + 1);
  os << "]";
  return os.str();
}

}  // namespace flatspec
