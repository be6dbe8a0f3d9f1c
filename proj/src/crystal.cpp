#include "flatspec/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "flatspec/error.hpp"

namespace flatspec {

namespace {

Translation reduce_mod1(Translation b) {
  for (auto& x : b)
    x = x.frac();
  return b;
}

std::string translation_str(const Translation& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (i ? "," : "") + b[i].str();
  return s + ")";
}

}  // namespace

IsometryElement::IsometryElement(SignedPermutation B, Translation b)
    : linear(std::move(B)), translation(reduce_mod1(std::move(b))) {
  if (static_cast<int>(translation.size()) != linear.dim())
    fail_validation("isometry: translation has " + std::to_string(translation.size()) +
                    " coordinates, linear part has dimension " + std::to_string(linear.dim()));
}

IsometryElement IsometryElement::identity(int n) {
  return {SignedPermutation::identity(n), Translation(n)};
}

bool IsometryElement::is_identity() const {
  return linear.is_identity() &&
         std::all_of(translation.begin(), translation.end(),
                     [](Rational4 x) { return x.quarters() == 0; });
}

std::string IsometryElement::str() const {
  return "B=" + linear.str() + " b=" + translation_str(translation);
}

IsometryElement compose(const IsometryElement& a, const IsometryElement& b) {
  if (a.dim() != b.dim())
    fail_range("compose: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
               std::to_string(b.dim()) + ")");
  Translation t = b.linear.inverse().apply(a.translation);
  for (int i = 0; i < a.dim(); ++i)
    t[i] += b.translation[i];
  return {a.linear * b.linear, std::move(t)};
}

const IsometryElement* SpaceGroup::find(const SignedPermutation& B) const {
  for (const auto& r : reps_)
    if (r.linear == B)
      return &r;
  return nullptr;
}

SpaceGroup expand_holonomy(std::span<const IsometryElement> generators, int dim, long cap) {
  if (dim < 1)
    fail_range("expand_holonomy: dimension must be at least 1");
  SpaceGroup g;
  g.dim_ = dim;
  for (const auto& gen : generators) {
    if (gen.dim() != dim)
      fail_validation("generator " + gen.str() + " has dimension " + std::to_string(gen.dim()) +
                      ", expected " + std::to_string(dim));
    g.gens_.push_back(gen);
  }
  std::map<SignedPermutation, std::size_t> index;
  g.reps_.push_back(IsometryElement::identity(dim));
  index.emplace(g.reps_.front().linear, 0);
  for (std::size_t i = 0; i < g.reps_.size(); ++i) {
    for (const auto& gen : g.gens_) {
      IsometryElement p = compose(g.reps_[i], gen);
      auto it = index.find(p.linear);
      if (it != index.end()) {
        if (g.reps_[it->second].translation != p.translation)
          fail_validation("inconsistent cocycle: linear part " + p.linear.str() +
                          " reached with translations " +
                          translation_str(g.reps_[it->second].translation) + " and " +
                          translation_str(p.translation));
        continue;
      }
      if (static_cast<long>(g.reps_.size()) >= cap)
        throw ResourceError("expand_holonomy: holonomy group exceeds cap " + std::to_string(cap));
      index.emplace(p.linear, g.reps_.size());
      g.reps_.push_back(std::move(p));
    }
  }
  return g;
}

std::optional<IsometryElement> torsion_witness(const SpaceGroup& g) {
  for (const auto& r : g.representatives()) {
    if (r.linear.is_identity())
      continue;
    bool free_here = false;
    for (const auto& c : r.linear.cycles()) {
      if (c.sign_product != 1)
        continue;
      Rational4 s;
      for (std::size_t t = 0; t < c.indices.size(); ++t)
        s += c.weights[t] * r.translation[c.indices[t]];
      if (!s.is_integer()) {
        free_here = true;
        break;
      }
    }
    if (!free_here)
      return r;
  }
  return std::nullopt;
}

bool is_torsion_free(const SpaceGroup& g) { return !torsion_witness(g).has_value(); }

BieberbachGroup BieberbachGroup::certify(SpaceGroup g) {
  if (auto w = torsion_witness(g))
    fail_validation("group " + (g.name().empty() ? std::string("<unnamed>") : g.name()) +
                    " has torsion: the coset of " + w->str() +
                    " contains an element with a fixed point");
  return BieberbachGroup(std::move(g));
}

BieberbachGroup BieberbachGroup::from_generators(std::span<const IsometryElement> generators,
                                                 int dim, std::string name) {
  SpaceGroup g = expand_holonomy(generators, dim);
  g.set_name(std::move(name));
  return certify(std::move(g));
}

bool check_closure(const SpaceGroup& g) {
  const auto& reps = g.representatives();
  std::map<SignedPermutation, const IsometryElement*> index;
  for (const auto& r : reps)
    index.emplace(r.linear, &r);
  if (index.size() != reps.size())
    return false;
  for (const auto& a : reps)
    for (const auto& b : reps) {
      IsometryElement p = compose(a, b);
      auto it = index.find(p.linear);
      if (it == index.end() || it->second->translation != p.translation)
        return false;
    }
  return true;
}

std::string to_string(HolonomyKind k) {
  switch (k) {
    case HolonomyKind::ElementaryAbelian2: return "elementary_abelian_2";
    case HolonomyKind::Cyclic4: return "cyclic_4";
    default: return "other";
  }
}

namespace {

bool commute(const SignedPermutation& a, const SignedPermutation& b) { return a * b == b * a; }

// Primary decomposition of a finite abelian group from its element orders.
std::string abelian_name(const std::vector<long>& orders) {
  const long n = static_cast<long>(orders.size());
  std::vector<long> primes;
  long m = n;
  for (long p = 2; p <= m; ++p) {
    if (m % p)
      continue;
    primes.push_back(p);
    while (m % p == 0)
      m /= p;
  }
  std::string name;
  for (long p : primes) {
    // s[i] = log_p #{x : x^(p^i) = 1}
    std::vector<int> s{0};
    long pe = 1;
    while (true) {
      pe *= p;
      long count = std::count_if(orders.begin(), orders.end(), [&](long o) { return pe % o == 0; });
      int lg = 0;
      for (long c = count; c > 1; c /= p)
        ++lg;
      s.push_back(lg);
      if (s.back() == s[s.size() - 2])
        break;
    }
    const int top = static_cast<int>(s.size()) - 2;
    for (int e = top; e >= 1; --e) {
      int at_least_e = s[e] - s[e - 1];
      int at_least_next = e + 1 < static_cast<int>(s.size()) ? s[e + 1] - s[e] : 0;
      int count = at_least_e - at_least_next;
      if (count <= 0)
        continue;
      long q = 1;
      for (int i = 0; i < e; ++i)
        q *= p;
      if (!name.empty())
        name += "x";
      name += "Z" + std::to_string(q);
      if (count > 1)
        name += "^" + std::to_string(count);
    }
  }
  return name;
}

std::string nonabelian_name(const std::vector<SignedPermutation>& elems,
                            const std::vector<long>& orders) {
  const long n = static_cast<long>(elems.size());
  if (n == 8 && std::count(orders.begin(), orders.end(), 2L) == 1)
    return "Q8";
  if (n % 2 == 0) {
    const long m = n / 2;
    for (std::size_t r = 0; r < elems.size(); ++r) {
      if (orders[r] != m)
        continue;
      std::vector<SignedPermutation> rot{SignedPermutation::identity(elems[r].dim())};
      for (long i = 1; i < m; ++i)
        rot.push_back(rot.back() * elems[r]);
      bool dihedral = true;
      for (std::size_t x = 0; x < elems.size() && dihedral; ++x)
        if (std::find(rot.begin(), rot.end(), elems[x]) == rot.end() && orders[x] != 2)
          dihedral = false;
      if (dihedral)
        return "D" + std::to_string(m);
    }
  }
  return "nonabelian(order=" + std::to_string(n) + ")";
}

}  // namespace

HolonomyClass classify_holonomy(const SpaceGroup& g) {
  HolonomyClass c;
  std::vector<SignedPermutation> elems;
  std::vector<long> orders;
  for (const auto& r : g.representatives()) {
    elems.push_back(r.linear);
    orders.push_back(r.linear.order());
  }
  c.order = static_cast<long>(elems.size());
  const bool exponent_two = std::all_of(orders.begin(), orders.end(), [](long o) { return o <= 2; });
  // A group of exponent 2 is abelian, and its order is then a power of 2.
  if (exponent_two) {
    c.kind = HolonomyKind::ElementaryAbelian2;
    for (long m = c.order; m > 1; m /= 2)
      ++c.rank;
    c.abelian = true;
    c.name = c.rank == 0 ? "trivial" : c.rank == 1 ? "Z2" : "Z2^" + std::to_string(c.rank);
    return c;
  }
  if (c.order <= 256) {
    for (std::size_t i = 0; i < elems.size() && c.abelian; ++i)
      for (std::size_t j = i + 1; j < elems.size() && c.abelian; ++j)
        c.abelian = commute(elems[i], elems[j]);
  } else {
    for (const auto& gi : g.generators())
      for (const auto& gj : g.generators())
        if (!commute(gi.linear, gj.linear))
          c.abelian = false;
  }
  if (c.order == 4 && std::count(orders.begin(), orders.end(), 4L) > 0)
    c.kind = HolonomyKind::Cyclic4;
  if (c.order <= 16)
    c.name = c.abelian ? abelian_name(orders) : nonabelian_name(elems, orders);
  return c;
}

bool is_diagonal_type(const SpaceGroup& g) {
  for (const auto& r : g.representatives()) {
    if (!r.linear.is_diagonal())
      return false;
    for (Rational4 x : r.translation)
      if (x.quarters() % 2 != 0)
        return false;
  }
  return true;
}

bool is_orientable(const SpaceGroup& g) {
  return std::all_of(g.representatives().begin(), g.representatives().end(),
                     [](const IsometryElement& r) { return r.linear.determinant() == 1; });
}

std::string canonical_key(const SpaceGroup& g) {
  std::vector<IsometryElement> reps = g.representatives();
  std::sort(reps.begin(), reps.end());
  std::string key = "n=" + std::to_string(g.dim());
  for (const auto& r : reps)
    key += ";" + r.str();
  return key;
}

ValidationReport validate(std::span<const IsometryElement> generators, int dim) {
  ValidationReport rep;
  std::vector<IsometryElement> gens;
  for (const auto& gen : generators) {
    if (gen.dim() != dim) {
      rep.errors.push_back("generator " + gen.str() + " has dimension " +
                           std::to_string(gen.dim()) + ", expected " + std::to_string(dim));
      return rep;
    }
    gens.push_back(gen);
  }

  // Linear closure first, independent of translations.
  std::vector<SignedPermutation> linear{SignedPermutation::identity(dim)};
  std::map<SignedPermutation, int> seen{{linear.front(), 0}};
  for (std::size_t i = 0; i < linear.size() && rep.errors.empty(); ++i)
    for (const auto& gen : gens) {
      SignedPermutation p = linear[i] * gen.linear;
      if (seen.count(p))
        continue;
      if (static_cast<long>(linear.size()) >= kDefaultHolonomyCap) {
        rep.errors.push_back("holonomy group exceeds cap " + std::to_string(kDefaultHolonomyCap));
        break;
      }
      seen.emplace(p, 0);
      linear.push_back(std::move(p));
    }
  if (!rep.errors.empty())
    return rep;
  rep.closure = true;
  rep.holonomy_order = static_cast<long>(linear.size());

  SpaceGroup g;
  try {
    g = expand_holonomy(gens, dim);
  } catch (const Error& e) {
    rep.errors.push_back(e.what());
    return rep;
  }
  rep.cocycle = g.holonomy_order() <= 512 ? check_closure(g) : true;
  if (!rep.cocycle) {
    rep.errors.push_back("multiplication table of representatives is not consistent mod Z^n");
    return rep;
  }
  if (auto w = torsion_witness(g))
    rep.errors.push_back("torsion: the coset of " + w->str() +
                         " contains an element with a fixed point");
  else
    rep.torsion_free = true;
  rep.holonomy = classify_holonomy(g);
  rep.diagonal_type = is_diagonal_type(g);
  rep.orientable = is_orientable(g);
  return rep;
}

}  // namespace flatspec
