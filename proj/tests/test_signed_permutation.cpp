#include "doctest.h"

#include <random>

#include "flatspec/error.hpp"
#include "flatspec/signed_permutation.hpp"
#include "oracles.hpp"

using namespace flatspec;

namespace {

// Dense product for cross-checking operator*.
std::vector<std::vector<int>> matmul(const std::vector<std::vector<int>>& a,
                                     const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

int dense_det(std::vector<std::vector<int>> m) {
  // Signed permutation matrices: expand along the single nonzero per column.
  const int n = static_cast<int>(m.size());
  std::vector<int> row_of(n);
  int sign = 1;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m[i][j] != 0) {
        row_of[j] = i;
        sign *= m[i][j];
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (row_of[i] > row_of[j])
        sign = -sign;
  return sign;
}

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(SignedPermutation({0, 0}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(SignedPermutation({0, 1}, {1, 2}), ValidationError);
  CHECK_THROWS_AS(SignedPermutation({0, 2}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(SignedPermutation({0, 1}, {1}), ValidationError);
  CHECK_THROWS_AS(SignedPermutation::from_matrix({{1, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(SignedPermutation::from_matrix({{2, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("column convention and dense matrices") {
  // The rotation [[0,1],[-1,0]] sends e1 to -e2 and e2 to e1.
  auto r = SignedPermutation::from_matrix({{0, 1}, {-1, 0}});
  CHECK(r.image(0) == 1);
  CHECK(r.sign(0) == -1);
  CHECK(r.image(1) == 0);
  CHECK(r.sign(1) == 1);
  CHECK(r.apply(std::vector<int>{1, 0}) == IntVector{0, -1});
  CHECK(r.order() == 4);
  CHECK(r.determinant() == 1);
  CHECK(oracle::dense(r) == std::vector<std::vector<int>>{{0, 1}, {-1, 0}});
}

TEST_CASE("cycles, order, determinant") {
  auto j = SignedPermutation::from_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(j.order() == 2);
  CHECK(j.determinant() == -1);
  auto cyc = j.cycles();
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0].indices.size() == 2);
  CHECK(cyc[0].sign_product == 1);
  CHECK(SignedPermutation::identity(5).is_identity());
  CHECK(SignedPermutation::diagonal(std::vector<int>{-1, 1, -1}).is_diagonal());
  CHECK(!j.is_diagonal());
  CHECK(j.str() == "[+2 +1 +3]");
}

TEST_CASE("property: products, inverses and invariants match dense arithmetic") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto a = oracle::random_signed_permutation(rng, n);
    auto b = oracle::random_signed_permutation(rng, n);
    REQUIRE(oracle::dense(a * b) == matmul(oracle::dense(a), oracle::dense(b)));
    REQUIRE((a * a.inverse()).is_identity());
    REQUIRE(a.determinant() == dense_det(oracle::dense(a)));
    // order is the least m > 0 with a^m = Id
    auto p = a;
    long m = 1;
    while (!p.is_identity()) {
      p = p * a;
      ++m;
    }
    REQUIRE(a.order() == m);
  }
}

TEST_CASE("direct_sum stacks blocks") {
  auto j = SignedPermutation::from_matrix({{0, 1}, {-1, 0}});
  std::vector<SignedPermutation> blocks{j, SignedPermutation::diagonal(std::vector<int>{1, -1})};
  auto s = SignedPermutation::direct_sum(blocks);
  CHECK(s.dim() == 4);
  CHECK(oracle::dense(s) ==
        std::vector<std::vector<int>>{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
}
