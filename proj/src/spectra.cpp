#include "flatspec/spectra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "flatspec/error.hpp"

namespace flatspec {

Integer krawtchouk(int n, int p, int x) {
  if (n < 0 || p < 0 || p > n || x < 0 || x > n)
    fail_range("krawtchouk: need 0 <= p, x <= n (n=" + std::to_string(n) + ", p=" +
               std::to_string(p) + ", x=" + std::to_string(x) + ")");
  Integer s = 0;
  for (int t = 0; t <= p; ++t) {
    Integer term = binomial(x, t) * binomial(n - x, p - t);
    if (t % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

KrawtchoukTable krawtchouk_table(int n) {
  if (n < 1 || n > 64)
    fail_range("krawtchouk_table: n must be in 1..64");
  KrawtchoukTable t;
  t.n = n;
  t.values.assign(n + 1, std::vector<Integer>(n + 1));
  for (int p = 0; p <= n; ++p)
    for (int x = 0; x <= n; ++x)
      t.values[p][x] = krawtchouk(n, p, x);
  return t;
}

std::vector<Integer> exterior_traces(const SignedPermutation& B) {
  // A k-cycle with sign product s has det(Id + tB) = 1 + (-1)^{k+1} s t^k.
  std::vector<Integer> poly{1};
  for (const auto& c : B.cycles()) {
    const std::size_t k = c.indices.size();
    const int coeff = ((k % 2 == 1) ? 1 : -1) * c.sign_product;
    std::vector<Integer> next(poly.size() + k, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + k] += coeff * poly[i];
    }
    poly = std::move(next);
  }
  poly.resize(B.dim() + 1, 0);
  return poly;
}

Integer trace_p(const SignedPermutation& B, int p) {
  if (p < 0 || p > B.dim())
    fail_range("trace_p: degree " + std::to_string(p) + " outside 0.." + std::to_string(B.dim()));
  return exterior_traces(B)[p];
}

Integer trace_p_oracle(const SignedPermutation& B, int p) {
  const int n = B.dim();
  if (n > 12)
    throw ResourceError("trace_p_oracle: dimension " + std::to_string(n) + " exceeds 12");
  if (p < 0 || p > n)
    fail_range("trace_p_oracle: degree out of range");
  Integer tr = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != p)
      continue;
    std::vector<int> idx, img;
    int sign = 1;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        idx.push_back(i);
        img.push_back(B.image(i));
        sign *= B.sign(i);
      }
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != idx)
      continue;  // off-diagonal in the wedge basis
    // sign of the permutation that sorts img
    for (std::size_t a = 0; a < img.size(); ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b)
        if (img[a] > img[b])
          sign = -sign;
    tr += sign;
  }
  return tr;
}

namespace {

// Fixed vectors of the shell bucketed by 4 v.b mod 4.
std::array<long, 4> phase_counts(const IsometryElement& gamma, const Shell& shell) {
  std::array<long, 4> counts{};
  const int n = gamma.dim();
  for (const auto& v : shell.vectors) {
    if (!gamma.linear.fixes(v))
      continue;
    long long q = 0;
    for (int i = 0; i < n; ++i)
      q += static_cast<long long>(v[i]) * gamma.translation[i].quarters();
    ++counts[((q % 4) + 4) % 4];
  }
  return counts;
}

GaussianInt from_counts(const std::array<long, 4>& c) {
  // e^{-2 pi i q/4}: 1, -i, -1, i
  return {Integer(c[0]) - c[2], Integer(c[3]) - c[1]};
}

void check_dims(const BieberbachGroup& g, const Shell& shell) {
  if (g.dim() != shell.dim)
    fail_range("shell dimension " + std::to_string(shell.dim) + " does not match group dimension " +
               std::to_string(g.dim()));
}

}  // namespace

GaussianInt character_sum(const IsometryElement& gamma, const Shell& shell) {
  if (gamma.dim() != shell.dim)
    fail_range("character_sum: dimension mismatch");
  return from_counts(phase_counts(gamma, shell));
}

GaussianInt character_sum(const IsometryElement& gamma, long norm_sq, long cap) {
  return character_sum(gamma, shell_vectors(gamma.dim(), norm_sq, cap));
}

MultiplicityRow multiplicities(const BieberbachGroup& g, const Shell& shell) {
  check_dims(g, shell);
  const int n = g.dim();
  std::vector<GaussianInt> acc(n + 1);
  for (const auto& r : g.representatives()) {
    GaussianInt e = from_counts(phase_counts(r, shell));
    if (e == GaussianInt{})
      continue;
    std::vector<Integer> tr = exterior_traces(r.linear);
    for (int p = 0; p <= n; ++p)
      acc[p] += tr[p] * e;
  }
  MultiplicityRow row;
  row.group = g.name();
  row.norm_sq = shell.norm_sq;
  const Integer order = g.holonomy_order();
  for (int p = 0; p <= n; ++p) {
    const GaussianInt& s = acc[p];
    if (!s.is_real() || s.re % order != 0 || s.re < 0)
      throw IntegrityError("multiplicity of degree " + std::to_string(p) + " at N=" +
                           std::to_string(shell.norm_sq) + " for group '" + g.name() +
                           "' is not a nonnegative integer: " + s.str() + " / " + order.str());
    Integer d = s.re / order;
    row.d.push_back(d);
    row.d_f += d;
    (p % 2 == 0 ? row.d_e : row.d_o) += d;
  }
  return row;
}

MultiplicityRow multiplicities(const BieberbachGroup& g, long norm_sq, long cap) {
  return multiplicities(g, shell_vectors(g.dim(), norm_sq, cap));
}

Integer d_p(const BieberbachGroup& g, int p, long norm_sq, long cap) {
  if (p < 0 || p > g.dim())
    fail_range("d_p: degree " + std::to_string(p) + " outside 0.." + std::to_string(g.dim()));
  return multiplicities(g, norm_sq, cap).d[p];
}

Integer d_f(const BieberbachGroup& g, long norm_sq, long cap) {
  return multiplicities(g, norm_sq, cap).d_f;
}
Integer d_e(const BieberbachGroup& g, long norm_sq, long cap) {
  return multiplicities(g, norm_sq, cap).d_e;
}
Integer d_o(const BieberbachGroup& g, long norm_sq, long cap) {
  return multiplicities(g, norm_sq, cap).d_o;
}

Integer betti(const BieberbachGroup& g, int p) { return d_p(g, p, 0); }

std::vector<Integer> betti_numbers(const BieberbachGroup& g) { return multiplicities(g, 0).d; }

bool TheoremReport::passed() const { return failures() == 0; }

int TheoremReport::failures() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

TheoremReport theorem_check(const BieberbachGroup& g, long max_norm_sq, long cap) {
  HolonomyClass hc = classify_holonomy(g);
  if (hc.kind != HolonomyKind::ElementaryAbelian2)
    fail_range("theorem_check: holonomy of '" + g.name() + "' is " +
               (hc.name.empty() ? to_string(hc.kind) : hc.name) + ", not Z_2^k");
  TheoremReport rep;
  rep.group = g.name();
  rep.n = g.dim();
  rep.k = hc.rank;
  const Integer full = Integer(1) << (rep.n - rep.k);
  for (long N = 0; N <= max_norm_sq; ++N) {
    Shell shell = shell_vectors(g.dim(), N, cap);
    MultiplicityRow row = multiplicities(g, shell);
    TheoremCheckEntry e;
    e.norm_sq = N;
    e.shell_size = shell.size();
    e.d_f = row.d_f;
    e.d_e = row.d_e;
    e.d_o = row.d_o;
    e.expected_f = full * e.shell_size;
    e.expected_half = e.expected_f / 2;
    e.pass = e.d_f == e.expected_f && e.d_e == e.expected_half && e.d_o == e.expected_half;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

CompareMode CompareMode::parse(std::string_view text) {
  CompareMode m;
  if (text == "f" || text == "full") {
    m.kind = Kind::Full;
  } else if (text == "e" || text == "even") {
    m.kind = Kind::Even;
  } else if (text == "o" || text == "odd") {
    m.kind = Kind::Odd;
  } else if (text == "all") {
    m.kind = Kind::AllDegrees;
  } else if (text == "functions") {
    m.kind = Kind::Degree;
    m.degree = 0;
  } else {
    std::string_view digits = text.starts_with("p=") ? text.substr(2) : text;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }))
      fail_range("unknown comparison mode '" + std::string(text) +
                 "' (expected p, p=<p>, f, e, o, functions or all)");
    m.kind = Kind::Degree;
    m.degree = std::stoi(std::string(digits));
  }
  return m;
}

std::string CompareMode::str() const {
  switch (kind) {
    case Kind::Degree: return "p=" + std::to_string(degree);
    case Kind::Full: return "f";
    case Kind::Even: return "e";
    case Kind::Odd: return "o";
    default: return "all";
  }
}

SpectrumVerdict compare_spectra(const BieberbachGroup& g1, const BieberbachGroup& g2,
                                const CompareMode& mode, long max_norm_sq, long cap) {
  if (g1.dim() != g2.dim())
    fail_range("compare_spectra: dimensions differ (" + std::to_string(g1.dim()) + " vs " +
               std::to_string(g2.dim()) + ")");
  if (mode.kind == CompareMode::Kind::Degree && (mode.degree < 0 || mode.degree > g1.dim()))
    fail_range("compare_spectra: degree " + std::to_string(mode.degree) + " outside 0.." +
               std::to_string(g1.dim()));
  SpectrumVerdict v;
  v.max_norm_sq = max_norm_sq;
  v.mode = mode.str();
  for (long N = 0; N <= max_norm_sq; ++N) {
    Shell shell = shell_vectors(g1.dim(), N, cap);
    MultiplicityRow a = multiplicities(g1, shell);
    MultiplicityRow b = multiplicities(g2, shell);
    auto differ = [&](const Integer& x, const Integer& y, std::string label) {
      if (x == y)
        return false;
      v.equal = false;
      v.norm_sq = N;
      v.mode = std::move(label);
      v.value1 = x;
      v.value2 = y;
      return true;
    };
    switch (mode.kind) {
      case CompareMode::Kind::Degree:
        if (differ(a.d[mode.degree], b.d[mode.degree], mode.str()))
          return v;
        break;
      case CompareMode::Kind::Full:
        if (differ(a.d_f, b.d_f, "f"))
          return v;
        break;
      case CompareMode::Kind::Even:
        if (differ(a.d_e, b.d_e, "e"))
          return v;
        break;
      case CompareMode::Kind::Odd:
        if (differ(a.d_o, b.d_o, "o"))
          return v;
        break;
      case CompareMode::Kind::AllDegrees:
        for (int p = 0; p <= g1.dim(); ++p)
          if (differ(a.d[p], b.d[p], "p=" + std::to_string(p)))
            return v;
        break;
    }
  }
  return v;
}

Z2ClosedForms z2_closed_forms(int j, int h, int n, int p) {
  const int l = n - 2 * j - h;
  if (j < 0 || h < 0 || l < 1 || j + h == 0)
    fail_range("z2_closed_forms: need n = 2j+h+l with l >= 1, j+h != 0 (j=" + std::to_string(j) +
               ", h=" + std::to_string(h) + ", n=" + std::to_string(n) + ")");
  if (p < 0 || p > n)
    fail_range("z2_closed_forms: degree out of range");
  const Integer K = krawtchouk(n, p, j + h);
  Z2ClosedForms f;
  f.d_p_at_1 = binomial(n, p) * n + K * (l - 2);
  f.d_p_at_2 = 2 * binomial(n, p) * binomial(n, 2) + K * (j + (l - 1) * (l - 4));
  f.d_0_at_1 = n + l - 2;
  f.d_0_at_2 = n * (n - 1) + j + (l - 1) * (l - 4);
  return f;
}

}  // namespace flatspec
