#include "flatspec/lattice.hpp"

#include <cstdlib>
#include <string>

#include "flatspec/error.hpp"

namespace flatspec {

long shell_cap_from_env() {
  const char* s = std::getenv("FLATSPEC_SHELL_CAP");
  if (s == nullptr || *s == '\0')
    return kDefaultShellCap;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 0)
    fail_range(std::string("FLATSPEC_SHELL_CAP is not a nonnegative integer: ") + s);
  return v;
}

namespace {

long isqrt(long x) {
  long r = 0;
  while ((r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

void enumerate(int pos, long remaining, IntVector& cur, std::vector<IntVector>& out) {
  const int n = static_cast<int>(cur.size());
  if (pos == n - 1) {
    long r = isqrt(remaining);
    if (r * r != remaining)
      return;
    if (r == 0) {
      cur[pos] = 0;
      out.push_back(cur);
      return;
    }
    cur[pos] = static_cast<int>(-r);
    out.push_back(cur);
    cur[pos] = static_cast<int>(r);
    out.push_back(cur);
    return;
  }
  long r = isqrt(remaining);
  for (long x = -r; x <= r; ++x) {
    cur[pos] = static_cast<int>(x);
    enumerate(pos + 1, remaining - x * x, cur, out);
  }
}

}  // namespace

Shell shell_vectors(int n, long norm_sq, long cap) {
  if (n < 1)
    fail_range("shell_vectors: dimension must be at least 1");
  if (norm_sq < 0)
    fail_range("shell_vectors: squared norm must be nonnegative");
  if (norm_sq > cap)
    throw ResourceError("shell_vectors: squared norm " + std::to_string(norm_sq) +
                        " exceeds shell cap " + std::to_string(cap));
  Shell s{n, norm_sq, {}};
  IntVector cur(n, 0);
  enumerate(0, norm_sq, cur, s.vectors);
  return s;
}

std::vector<IntVector> fixed_vectors(const Shell& shell, const SignedPermutation& B) {
  if (B.dim() != shell.dim)
    fail_range("fixed_vectors: shell dimension " + std::to_string(shell.dim) +
               " does not match matrix dimension " + std::to_string(B.dim()));
  std::vector<IntVector> out;
  for (const auto& v : shell.vectors)
    if (B.fixes(v))
      out.push_back(v);
  return out;
}

int fixed_space_dim(const SignedPermutation& B) {
  int d = 0;
  for (const auto& c : B.cycles())
    d += c.sign_product == 1;
  return d;
}

}  // namespace flatspec
