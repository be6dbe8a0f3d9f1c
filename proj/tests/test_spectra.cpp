#include "doctest.h"

#include <random>

#include "flatspec/error.hpp"
#include "flatspec/families.hpp"
#include "flatspec/spectra.hpp"
#include "oracles.hpp"

using namespace flatspec;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

// The (paper-independent) definition of K_p^n(x) as a signed binomial sum.
Integer krawtchouk_direct(int n, int p, int x) {
  Integer s = 0;
  for (int k = 0; k <= p; ++k) {
    Integer t = binomial(x, k) * binomial(n - x, p - k);
    s += (k % 2) ? -t : t;
  }
  return s;
}

const IsometryElement& rep_with(const BieberbachGroup& g, std::vector<int> signs) {
  const auto* r = g.find(SignedPermutation::diagonal(signs));
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("Krawtchouk values") {
  CHECK(krawtchouk(3, 2, 1) == -1);
  CHECK(krawtchouk(4, 1, 2) == 0);
  for (int n = 1; n <= 10; ++n)
    for (int x = 0; x <= n; ++x)
      CHECK(krawtchouk(n, 0, x) == 1);
  auto t1 = krawtchouk_table(1);
  CHECK(t1.values == std::vector<std::vector<Integer>>{ints({1, 1}), ints({1, -1})});
  CHECK_THROWS_AS(krawtchouk(3, 4, 0), RangeError);
  CHECK_THROWS_AS(krawtchouk_table(0), RangeError);
  CHECK_THROWS_AS(krawtchouk_table(65), RangeError);
  CHECK(krawtchouk_table(64)(32, 0) == binomial(64, 32));
}

TEST_CASE("Krawtchouk table agrees with the binomial-sum definition") {
  for (int n = 1; n <= 20; ++n) {
    auto t = krawtchouk_table(n);
    for (int p = 0; p <= n; ++p)
      for (int x = 0; x <= n; ++x)
        REQUIRE(t(p, x) == krawtchouk_direct(n, p, x));
  }
}

TEST_CASE("Krawtchouk vanishing sums") {
  for (int n = 1; n <= 16; ++n) {
    auto t = krawtchouk_table(n);
    for (int j = 0; j <= n; ++j) {
      Integer all = 0, even = 0, odd = 0;
      for (int p = 0; p <= n; ++p) {
        all += t(p, j);
        (p % 2 ? odd : even) += t(p, j);
      }
      REQUIRE(all == (j == 0 ? Integer(1) << n : Integer(0)));
      if (j >= 1 && j <= n - 1) {
        REQUIRE(even == 0);
        REQUIRE(odd == 0);
      }
    }
  }
}

TEST_CASE("exterior traces") {
  auto j1 = SignedPermutation::from_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(trace_p(j1, 1) == 1);
  CHECK(trace_p(j1, 1) == krawtchouk(3, 1, 1));
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      CHECK(trace_p(SignedPermutation::identity(n), p) == binomial(n, p));
  CHECK(trace_p_oracle(SignedPermutation::identity(4), 2) == 6);
  auto d = SignedPermutation::diagonal(std::vector<int>{-1, -1, 1});
  CHECK(trace_p_oracle(d, 2) == -1);
  CHECK(trace_p(d, 2) == -1);
  auto j4 = SignedPermutation::from_matrix(
      {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
  CHECK(trace_p_oracle(j4, 2) == -2);
  CHECK(trace_p(j4, 2) == krawtchouk(4, 2, 2));
}

TEST_CASE("invariant 2-forms of the Ex. 3.5 rotation") {
  // B1' = rotation (+) diag(1,-1,-1,1): the trace on 2-forms is -1, and
  // averaging over the cyclic group gives the 3 invariant 2-forms.
  auto g = catalog("dim6/z4_Mp");
  const auto& B = g.generators().front().linear;
  CHECK(trace_p(B, 2) == -1);
  CHECK(trace_p_oracle(B, 2) == -1);
  Integer avg = 0;
  for (const auto& r : g.representatives())
    avg += trace_p(r.linear, 2);
  CHECK(avg / g.holonomy_order() == 3);
  CHECK(betti(g, 2) == 3);
}

TEST_CASE("property: trace_p matches the wedge-basis oracle") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto B = oracle::random_signed_permutation(rng, n);
    auto tr = exterior_traces(B);
    REQUIRE(tr.size() == static_cast<std::size_t>(n + 1));
    for (int p = 0; p <= n; ++p)
      REQUIRE(tr[p] == trace_p_oracle(B, p));
  }
}

TEST_CASE("property: diagonal traces are Krawtchouk values") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<int> s(n);
    int minus = 0;
    for (auto& x : s) {
      x = (rng() & 1) ? 1 : -1;
      minus += x < 0;
    }
    auto B = SignedPermutation::diagonal(s);
    for (int p = 0; p <= n; ++p)
      REQUIRE(trace_p(B, p) == krawtchouk(n, p, minus));
  }
}

TEST_CASE("character sums of the HW trio") {
  auto m1 = catalog("hw3/M1"), m2 = catalog("hw3/M2"), m3 = catalog("hw3/M3");
  CHECK(character_sum(rep_with(m1, {-1, -1, 1}), 1) == GaussianInt(-2));
  CHECK(character_sum(rep_with(m1, {-1, 1, -1}), 1) == GaussianInt(-2));
  CHECK(character_sum(rep_with(m1, {1, -1, -1}), 1) == GaussianInt(-2));
  CHECK(character_sum(rep_with(m2, {-1, -1, 1}), 1) == GaussianInt(-2));
  CHECK(character_sum(rep_with(m2, {1, -1, 1}), 1) == GaussianInt(0));
  CHECK(character_sum(rep_with(m3, {-1, 1, 1}), 1) == GaussianInt(-4));
  CHECK(character_sum(rep_with(m3, {-1, 1, 1}), 5) == GaussianInt(-8));
  CHECK(character_sum(rep_with(m3, {-1, -1, 1}), 5) == GaussianInt(0));
  CHECK(character_sum(IsometryElement::identity(3), 5) == GaussianInt(24));
}

TEST_CASE("character sums of the Z2 family at N = 1") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& g : z2_family(n)) {
      const auto& gamma = g.generators().front();
      int plus_diag = 0;  // l, the number of +1 diagonal entries
      for (int i = 0; i < n; ++i)
        plus_diag += gamma.linear.image(i) == i && gamma.linear.sign(i) == 1;
      REQUIRE(character_sum(gamma, 1) == GaussianInt(2 * (plus_diag - 2)));
    }
}

TEST_CASE("quarter translations") {
  // B1 fixes +-e5 (phases -i and +i, which cancel) and +-e6.
  auto g = catalog("dim6/z4z2_M");
  CHECK(character_sum(g.generators().front(), 1) == GaussianInt(2));
  // v and -v are fixed together, so every character sum is real.
  for (const auto& name : {"dim6/z4z2_M", "dim6/z4z2_Mp", "dim6/z4_M", "dim6/z4_Mp"}) {
    auto h = catalog(name);
    for (const auto& r : h.representatives())
      for (long N = 0; N <= 6; ++N)
        REQUIRE(character_sum(r, N).is_real());
  }
}

TEST_CASE("multiplicities from the paper tables") {
  CHECK(d_p(catalog("dim3/m10"), 2, 1) == 10);
  CHECK(d_p(torus(3), 1, 1) == 18);
  CHECK(d_p(catalog("hw3/M1"), 1, 5) == 18);
  for (const char* name : {"dim3/m10", "dim3/m02", "dim3/m01"})
    CHECK(d_f(catalog(name), 1) == 24);
  for (const char* name : {"dim4/m11", "dim4/m10", "dim4/m03", "dim4/m02", "dim4/m01"})
    CHECK(d_f(catalog(name), 2) == 192);
  CHECK(d_e(catalog("hw3/M1"), 1) == 6);
  CHECK(d_o(catalog("hw3/M1"), 1) == 6);
  auto row = multiplicities(catalog("hw3/M3"), 1);
  CHECK(row.d == ints({0, 4, 6, 2}));
  CHECK(row.d_f == 12);
  CHECK(row.group == "hw3/M3");
  CHECK(row.norm_sq == 1);
}

TEST_CASE("Betti numbers") {
  CHECK(betti_numbers(catalog("dim6/z4z2_M")) == ints({1, 2, 3, 4, 3, 2, 1}));
  CHECK(betti_numbers(catalog("dim6/z4_M")) == ints({1, 2, 5, 8, 5, 2, 1}));
  for (int n : {5, 7})
    for (const auto& g : hw_examples(n))
      for (int p = 0; p <= n; ++p)
        REQUIRE(betti(g, p) == (p == 0 || p == n ? 1 : 0));
  CHECK_THROWS_AS(betti(torus(3), 4), RangeError);
}

TEST_CASE("Betti numbers of the Z2 family follow the cycle-count formula") {
  for (int n = 2; n <= 8; ++n)
    for (int j = 0; 2 * j <= n - 1; ++j)
      for (int h = 0; 2 * j + h <= n - 1; ++h) {
        if (j + h == 0)
          continue;
        const int l = n - 2 * j - h;
        auto g = z2_group(n, j, h);
        for (int p = 0; p <= n; ++p) {
          Integer expect = 0;
          for (int i = 0; 2 * i <= p; ++i)
            expect += binomial(j + h, 2 * i) * binomial(j + l, p - 2 * i);
          REQUIRE(betti(g, p) == expect);
        }
      }
}

TEST_CASE("property: multiplicities are nonnegative integers with Hodge duality") {
  std::vector<BieberbachGroup> groups;
  for (const auto& name : catalog_names())
    groups.push_back(catalog(name));
  for (const auto& g : kn_family(4))
    groups.push_back(g);
  for (const auto& g : groups) {
    const int n = g.dim();
    const bool orientable = is_orientable(g);
    for (long N = 0; N <= 12; ++N) {
      auto row = multiplicities(g, N);
      Integer sum = 0;
      for (int p = 0; p <= n; ++p) {
        REQUIRE(row.d[p] >= 0);
        sum += row.d[p];
        if (orientable)
          REQUIRE(row.d[p] == row.d[n - p]);
      }
      REQUIRE(sum == row.d_f);
      REQUIRE(row.d_e + row.d_o == row.d_f);
    }
  }
}

TEST_CASE("torus multiplicities") {
  for (int n = 1; n <= 5; ++n)
    for (long N = 0; N <= 10; ++N) {
      auto row = multiplicities(torus(n), N);
      const auto size = shell_vectors(n, N).size();
      for (int p = 0; p <= n; ++p)
        REQUIRE(row.d[p] == binomial(n, p) * size);
    }
}

TEST_CASE("multiplicities from a shared shell match fresh enumeration") {
  auto g = catalog("dim4/m03");
  auto shell = shell_vectors(4, 6);
  auto a = multiplicities(g, shell);
  auto b = multiplicities(g, 6);
  CHECK(a.d == b.d);
  CHECK_THROWS_AS(multiplicities(g, shell_vectors(3, 1)), RangeError);
}

TEST_CASE("theorem check") {
  auto r = theorem_check(catalog("hw3/M1"), 5);
  CHECK(r.k == 2);
  CHECK(r.passed());
  CHECK(r.entries.size() == 6);
  CHECK(r.entries[1].d_f == 12);
  CHECK(r.entries[1].expected_f == 12);

  auto k4 = kn_family(4).front();
  auto rk = theorem_check(k4, 2);
  CHECK(rk.k == 3);
  CHECK(rk.entries[1].d_f == 16);

  auto rt = theorem_check(torus(3), 2);
  CHECK(rt.k == 0);
  CHECK(rt.entries[2].d_f == 8 * 12);
  CHECK(rt.passed());

  CHECK_THROWS_AS(theorem_check(catalog("dim6/z4_M"), 1), RangeError);
}

TEST_CASE("compare modes") {
  CHECK(CompareMode::parse("f").kind == CompareMode::Kind::Full);
  CHECK(CompareMode::parse("full").kind == CompareMode::Kind::Full);
  CHECK(CompareMode::parse("e").kind == CompareMode::Kind::Even);
  CHECK(CompareMode::parse("o").kind == CompareMode::Kind::Odd);
  CHECK(CompareMode::parse("all").kind == CompareMode::Kind::AllDegrees);
  auto fn = CompareMode::parse("functions");
  CHECK(fn.kind == CompareMode::Kind::Degree);
  CHECK(fn.degree == 0);
  CHECK(CompareMode::parse("p=3").degree == 3);
  CHECK(CompareMode::parse("2").degree == 2);
  CHECK(CompareMode::parse("p=2").str() == "p=2");
  CHECK_THROWS_AS(CompareMode::parse("x"), RangeError);
}

TEST_CASE("compare spectra") {
  auto m1 = catalog("hw3/M1"), m2 = catalog("hw3/M2"), m3 = catalog("hw3/M3");
  auto v = compare_spectra(m1, m2, CompareMode::parse("f"), 25);
  CHECK(v.equal);
  v = compare_spectra(m1, m2, CompareMode::parse("p=0"), 1);
  CHECK(!v.equal);
  CHECK(v.norm_sq == 1);
  CHECK(v.value1 == 0);
  CHECK(v.value2 == 1);
  v = compare_spectra(catalog("dim6/z4z2_M"), catalog("dim6/z4z2_Mp"), CompareMode::parse("f"), 0);
  CHECK(!v.equal);
  CHECK(v.norm_sq == 0);
  CHECK(v.value1 == 16);
  CHECK(v.value2 == 8);
  v = compare_spectra(m1, m3, CompareMode::parse("p=2"), 25);
  CHECK(!v.equal);
  CHECK(v.norm_sq == 4);
  CHECK(v.mode == "p=2");
  CHECK_THROWS_AS(compare_spectra(m1, torus(4), CompareMode::parse("f"), 3), RangeError);
  CHECK_THROWS_AS(compare_spectra(m1, m2, CompareMode::parse("p=4"), 3), RangeError);
}

TEST_CASE("Z2 closed forms") {
  CHECK(z2_closed_forms(1, 0, 3, 0).d_0_at_1 == 2);
  CHECK(z2_closed_forms(0, 1, 3, 0).d_0_at_2 == 4);
  CHECK(z2_closed_forms(1, 1, 4, 2).d_p_at_1 == 26);
  for (int n = 2; n <= 8; ++n)
    for (const auto& g : z2_family(n)) {
      // names are z2/n/j/h
      int j = 0, h = 0;
      std::sscanf(g.name().c_str(), "z2/%*d/%d/%d", &j, &h);
      auto r1 = multiplicities(g, 1), r2 = multiplicities(g, 2);
      for (int p = 0; p <= n; ++p) {
        auto cf = z2_closed_forms(j, h, n, p);
        REQUIRE(r1.d[p] == cf.d_p_at_1);
        REQUIRE(r2.d[p] == cf.d_p_at_2);
        REQUIRE(r1.d[0] == cf.d_0_at_1);
        REQUIRE(r2.d[0] == cf.d_0_at_2);
      }
    }
}
