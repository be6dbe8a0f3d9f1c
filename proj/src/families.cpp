#include "flatspec/families.hpp"

#include <charconv>
#include <map>
#include <set>
#include <functional>

#include "flatspec/error.hpp"

namespace flatspec {

namespace {

const Rational4 kHalf = Rational4::from_quarters(2);
const Rational4 kQuarter = Rational4::from_quarters(1);

Translation unit_multiple(int n, int coord, Rational4 c) {
  Translation t(n);
  t[coord] = c;
  return t;
}

SignedPermutation swap_block() { return SignedPermutation::from_matrix({{0, 1}, {1, 0}}); }
SignedPermutation quarter_turn_block() {
  return SignedPermutation::from_matrix({{0, 1}, {-1, 0}});
}
SignedPermutation scalar(int s) { return SignedPermutation::diagonal(std::vector<int>{s}); }

}  // namespace

int kn_free_parameter_count(int n) { return (n - 1) * (n - 2) / 2; }

GhwArray GhwArray::from_index(int n, std::uint64_t index) {
  if (n < 2)
    fail_range("GHW arrays need n >= 2");
  const int free = kn_free_parameter_count(n);
  if (free < 64 && index >> free)
    fail_range("array index " + std::to_string(index) + " out of range for n=" + std::to_string(n));
  GhwArray a(n);
  int bit = free - 1;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j, --bit)
      a.set_half(i, j, (index >> bit) & 1u);
  for (int i = 1; i < n; ++i)
    a.set_half(i, i - 1, true);
  for (int i = 0; i < n; ++i) {
    bool parity = false;
    for (int j = 0; j < n - 1; ++j)
      parity ^= a.half(i, j);
    a.set_half(i, n - 1, parity);
  }
  return a;
}

GhwArray GhwArray::from_entries(const std::vector<std::vector<Rational4>>& entries) {
  const int n = static_cast<int>(entries.size());
  GhwArray a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n)
      fail_validation("GHW array is not square");
    for (int j = 0; j < n; ++j) {
      Rational4 x = entries[i][j].frac();
      if (x.quarters() != 0 && x != kHalf)
        fail_validation("GHW array entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is " + entries[i][j].str() + ", expected 0 or 1/2");
      a.set_half(i, j, x == kHalf);
    }
  }
  return a;
}

std::vector<std::string> GhwArray::violations() const {
  std::vector<std::string> v;
  auto pos = [](int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  if (n_ < 2) {
    v.push_back("dimension must be at least 2");
    return v;
  }
  for (int i = 0; i + 1 < n_; ++i) {
    if (!half(i + 1, i))
      v.push_back("subdiagonal entry " + pos(i + 1, i) + " must be 1/2");
    if (half(i, i))
      v.push_back("diagonal entry " + pos(i, i) + " must be 0");
  }
  if (!half(n_ - 1, n_ - 1))
    v.push_back("corner entry " + pos(n_ - 1, n_ - 1) + " must be 1/2");
  for (int j = 0; j < n_; ++j)
    for (int i = j + 2; i < n_; ++i)
      if (half(i, j))
        v.push_back("entry " + pos(i, j) + " below the subdiagonal must be 0");
  for (int i = 0; i < n_; ++i) {
    int count = 0;
    for (int j = 0; j < n_; ++j)
      count += half(i, j);
    if (count % 2)
      v.push_back("row " + std::to_string(i + 1) + " has an odd number of 1/2 entries");
  }
  return v;
}

void GhwArray::validate() const {
  auto v = violations();
  if (v.empty())
    return;
  std::string msg = "invalid GHW array:";
  for (const auto& s : v)
    msg += " " + s + ";";
  fail_validation(msg);
}

std::uint64_t GhwArray::index() const {
  std::uint64_t idx = 0;
  for (int i = 0; i < n_ - 1; ++i)
    for (int j = i + 1; j < n_ - 1; ++j)
      idx = (idx << 1) | static_cast<std::uint64_t>(half(i, j));
  return idx;
}

long z2_family_size(int n) {
  const long m = (n - 1) / 2;
  return (n - m) * (m + 1) - 1;
}

BieberbachGroup z2_group(int n, int j, int h) {
  const int l = n - 2 * j - h;
  if (n < 2 || j < 0 || h < 0 || l < 1 || j + h == 0)
    fail_range("z2_group: need n = 2j+h+l with l >= 1 and j+h != 0 (n=" + std::to_string(n) +
               ", j=" + std::to_string(j) + ", h=" + std::to_string(h) + ")");
  std::vector<SignedPermutation> blocks;
  for (int i = 0; i < j; ++i)
    blocks.push_back(swap_block());
  for (int i = 0; i < h; ++i)
    blocks.push_back(scalar(-1));
  for (int i = 0; i < l; ++i)
    blocks.push_back(scalar(1));
  std::vector<IsometryElement> gens{
      {SignedPermutation::direct_sum(blocks), unit_multiple(n, n - 1, kHalf)}};
  return BieberbachGroup::from_generators(
      gens, n, "z2/" + std::to_string(n) + "/" + std::to_string(j) + "/" + std::to_string(h));
}

std::vector<BieberbachGroup> z2_family(int n) {
  if (n < 2)
    fail_range("z2_family: n must be at least 2");
  std::vector<BieberbachGroup> out;
  for (int j = 0; j <= (n - 1) / 2; ++j)
    for (int h = 0; h < n - 2 * j; ++h)
      if (j + h != 0)
        out.push_back(z2_group(n, j, h));
  return out;
}

BieberbachGroup diagonal_group(const std::vector<std::vector<int>>& sign_columns,
                               const std::vector<Translation>& translations, std::string name) {
  if (sign_columns.size() != translations.size())
    fail_validation("diagonal_group: " + std::to_string(sign_columns.size()) + " sign columns but " +
                    std::to_string(translations.size()) + " translations");
  if (sign_columns.empty())
    fail_validation("diagonal_group: at least one generator is required");
  const int n = static_cast<int>(sign_columns.front().size());
  std::vector<IsometryElement> gens;
  for (std::size_t i = 0; i < sign_columns.size(); ++i) {
    if (static_cast<int>(sign_columns[i].size()) != n)
      fail_validation("diagonal_group: sign columns have different lengths");
    gens.emplace_back(SignedPermutation::diagonal(sign_columns[i]), translations[i]);
  }
  SpaceGroup g;
  try {
    g = expand_holonomy(gens, n);
  } catch (const ValidationError& e) {
    fail_validation(std::string("diagonal_group: cocycle check failed: ") + e.what());
  }
  g.set_name(std::move(name));
  if (auto w = torsion_witness(g))
    fail_validation("diagonal_group: torsion found: the coset of " + w->str() +
                    " contains an element with a fixed point");
  return BieberbachGroup::certify(std::move(g));
}

BieberbachGroup hw_group(int n, const std::vector<Translation>& translations, std::string name) {
  if (n < 3 || n % 2 == 0)
    fail_range("hw_group: dimension must be odd and at least 3");
  if (static_cast<int>(translations.size()) != n - 1)
    fail_validation("hw_group: expected " + std::to_string(n - 1) + " translations");
  std::vector<std::vector<int>> signs;
  for (int i = 0; i < n - 1; ++i) {
    std::vector<int> s(n, -1);
    s[i] = 1;
    signs.push_back(std::move(s));
  }
  return diagonal_group(signs, translations, std::move(name));
}

std::vector<BieberbachGroup> hw_examples(int n) {
  if (n < 5 || n % 2 == 0)
    fail_range("hw_examples: dimension must be odd and at least 5");
  // Search b_i = (e_i + e_{t_i})/2, t_i != i, with the targets t enumerated
  // lexicographically starting from the cyclic choice t_i = i + 1.
  std::vector<BieberbachGroup> out;
  std::set<std::string> keys;
  const int m = n - 1;
  std::vector<int> offset(m, 0);  // t_i = (i + 1 + offset_i) mod n, offset_i in [0, n-2]
  while (out.size() < 3) {
    std::vector<Translation> b;
    for (int i = 0; i < m; ++i) {
      Translation t(n);
      t[i] = kHalf;
      t[(i + 1 + offset[i]) % n] = kHalf;
      b.push_back(std::move(t));
    }
    try {
      auto g = hw_group(n, b, "hw/" + std::to_string(n) + "/" + std::to_string(out.size()));
      if (keys.insert(canonical_key(g)).second)
        out.push_back(std::move(g));
    } catch (const ValidationError&) {
    }
    int pos = m - 1;
    while (pos >= 0 && ++offset[pos] == n - 1)
      offset[pos--] = 0;
    if (pos < 0)
      break;
  }
  if (out.size() < 3)
    throw IntegrityError("hw_examples: search found only " + std::to_string(out.size()) + " groups");
  return out;
}

BieberbachGroup torus(int n) {
  auto g = BieberbachGroup::from_generators({}, n, "torus/" + std::to_string(n));
  return g;
}

BieberbachGroup kn_group_from_array(const GhwArray& a) {
  a.validate();
  const int n = a.dim();
  std::vector<IsometryElement> gens;
  for (int i = 0; i < n - 1; ++i) {
    std::vector<int> s(n, 1);
    s[i] = -1;
    Translation c(n);
    for (int r = 0; r < n; ++r)
      c[r] = a.entry(r, i);
    gens.emplace_back(SignedPermutation::diagonal(s), std::move(c));
  }
  SpaceGroup g = expand_holonomy(gens, n);
  // C_1 ... C_{n-1} = diag(-1, ..., -1, 1) must carry the array's last column.
  std::vector<int> last_signs(n, -1);
  last_signs[n - 1] = 1;
  const auto last = SignedPermutation::diagonal(last_signs);
  if (const IsometryElement* r = g.find(last)) {
    for (int row = 0; row < n; ++row)
      if (r->translation[row] != a.entry(row, n - 1))
        throw IntegrityError("kn_group_from_array: last column does not match C_1...C_{n-1}");
  }
  g.set_name("kn/" + std::to_string(n) + "/" + std::to_string(a.index()));
  return BieberbachGroup::certify(std::move(g));
}

std::vector<GhwArray> kn_arrays(int n, int cap) {
  if (n < 2)
    fail_range("kn_family: n must be at least 2");
  if (n > cap)
    throw ResourceError("kn_family: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const std::uint64_t count = std::uint64_t{1} << kn_free_parameter_count(n);
  std::vector<GhwArray> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    out.push_back(GhwArray::from_index(n, idx));
  return out;
}

std::vector<BieberbachGroup> kn_family(int n, int cap) {
  std::vector<BieberbachGroup> out;
  for (const auto& a : kn_arrays(n, cap))
    out.push_back(kn_group_from_array(a));
  return out;
}

namespace {

Translation halves(int n, std::initializer_list<int> coords_one_based) {
  Translation t(n);
  for (int c : coords_one_based)
    t[c - 1] = kHalf;
  return t;
}

BieberbachGroup named(BieberbachGroup g, std::string name) {
  g.set_name(std::move(name));
  return g;
}

// Holonomy generators of the dimension-6 examples with Z_4 and Z_4 x Z_2
// holonomy, block by block as printed.
SignedPermutation z4_B1() {
  std::vector<SignedPermutation> b{quarter_turn_block(), quarter_turn_block(), scalar(1), scalar(1)};
  return SignedPermutation::direct_sum(b);
}
SignedPermutation z4_B2() { return SignedPermutation::diagonal(std::vector<int>{-1, -1, 1, 1, 1, 1}); }
SignedPermutation z4_B1p() {
  std::vector<SignedPermutation> b{quarter_turn_block(), scalar(1), scalar(-1), scalar(-1), scalar(1)};
  return SignedPermutation::direct_sum(b);
}
SignedPermutation z4_B2p() {
  return SignedPermutation::diagonal(std::vector<int>{-1, -1, -1, 1, -1, 1});
}

using Builder = std::function<BieberbachGroup()>;

const std::map<std::string, Builder, std::less<>>& catalog_table() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"dim3/m10", [] { return named(z2_group(3, 1, 0), "dim3/m10"); }},
      {"dim3/m02", [] { return named(z2_group(3, 0, 2), "dim3/m02"); }},
      {"dim3/m01", [] { return named(z2_group(3, 0, 1), "dim3/m01"); }},
      {"dim4/m11", [] { return named(z2_group(4, 1, 1), "dim4/m11"); }},
      {"dim4/m10", [] { return named(z2_group(4, 1, 0), "dim4/m10"); }},
      {"dim4/m03", [] { return named(z2_group(4, 0, 3), "dim4/m03"); }},
      {"dim4/m02", [] { return named(z2_group(4, 0, 2), "dim4/m02"); }},
      {"dim4/m01", [] { return named(z2_group(4, 0, 1), "dim4/m01"); }},
      // Z_2^2 trio on the cubic lattice: didicosm (Hantzsche-Wendt), +a2, -a2.
      {"hw3/M1",
       [] {
         return diagonal_group({{-1, -1, 1}, {-1, 1, -1}}, {halves(3, {1, 3}), halves(3, {2})},
                               "hw3/M1");
       }},
      {"hw3/M2",
       [] {
         return diagonal_group({{-1, -1, 1}, {1, -1, 1}}, {halves(3, {2, 3}), halves(3, {3})},
                               "hw3/M2");
       }},
      {"hw3/M3",
       [] {
         return diagonal_group({{-1, -1, 1}, {1, -1, 1}}, {halves(3, {2, 3}), halves(3, {1})},
                               "hw3/M3");
       }},
      {"dim6/z4z2_M",
       [] {
         std::vector<IsometryElement> g{{z4_B1(), unit_multiple(6, 4, kQuarter)},
                                        {z4_B2(), unit_multiple(6, 5, kHalf)}};
         return BieberbachGroup::from_generators(g, 6, "dim6/z4z2_M");
       }},
      {"dim6/z4z2_Mp",
       [] {
         std::vector<IsometryElement> g{{z4_B1p(), unit_multiple(6, 5, kQuarter)},
                                        {z4_B2p(), halves(6, {4, 5})}};
         return BieberbachGroup::from_generators(g, 6, "dim6/z4z2_Mp");
       }},
      {"dim6/z4_M",
       [] {
         std::vector<IsometryElement> g{{z4_B1(), unit_multiple(6, 4, kQuarter)}};
         return BieberbachGroup::from_generators(g, 6, "dim6/z4_M");
       }},
      {"dim6/z4_Mp",
       [] {
         std::vector<IsometryElement> g{{z4_B1p(), unit_multiple(6, 5, kQuarter)}};
         return BieberbachGroup::from_generators(g, 6, "dim6/z4_Mp");
       }},
  };
  return table;
}

std::vector<int> parse_ints(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  while (true) {
    auto slash = s.find('/');
    std::string_view part = s.substr(0, slash);
    int v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty())
      fail_validation("malformed group reference '" + std::string(whole) + "'");
    out.push_back(v);
    if (slash == std::string_view::npos)
      break;
    s.remove_prefix(slash + 1);
  }
  return out;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : catalog_table())
    names.push_back(k);
  return names;
}

BieberbachGroup catalog(std::string_view name) {
  const auto& t = catalog_table();
  auto it = t.find(name);
  if (it == t.end())
    fail_validation("unknown catalog group '" + std::string(name) + "'");
  return it->second();
}

BieberbachGroup resolve_group(std::string_view ref) {
  if (catalog_table().count(ref))
    return catalog(ref);
  auto slash = ref.find('/');
  std::string_view kind = ref.substr(0, slash);
  if (slash == std::string_view::npos)
    fail_validation("unknown group reference '" + std::string(ref) + "'");
  std::vector<int> args = parse_ints(ref.substr(slash + 1), ref);
  if (kind == "torus" && args.size() == 1)
    return torus(args[0]);
  if (kind == "z2" && args.size() == 3)
    return z2_group(args[0], args[1], args[2]);
  if (kind == "kn" && args.size() == 2) {
    if (args[1] < 0)
      fail_validation("negative family index in '" + std::string(ref) + "'");
    return kn_group_from_array(GhwArray::from_index(args[0], static_cast<std::uint64_t>(args[1])));
  }
  if (kind == "hw" && args.size() == 2) {
    auto all = hw_examples(args[0]);
    if (args[1] < 0 || args[1] >= static_cast<int>(all.size()))
      fail_validation("hw example index out of range in '" + std::string(ref) + "'");
    return all[args[1]];
  }
  fail_validation("unknown group reference '" + std::string(ref) + "'");
}

}  // namespace flatspec
