#include "flatspec/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "flatspec/error.hpp"

namespace flatspec {

json to_json(Rational4 r) { return r.str(); }

Rational4 rational_from_json(const json& j) {
  if (j.is_string())
    return Rational4::parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rational4(j.get<long long>());
  fail_validation("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

json to_json(const GaussianInt& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

json to_json(const Shell& s) {
  json vecs = json::array();
  for (const auto& v : s.vectors)
    vecs.push_back(v);
  return {{"n", s.dim}, {"N", s.norm_sq}, {"count", s.size()}, {"vectors", std::move(vecs)}};
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail_validation(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

GroupSpec group_spec_from_json(const json& j) {
  GroupSpec spec;
  const json& dim = require(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 1)
    fail_validation("'dim' must be a positive integer");
  spec.dim = dim.get<int>();
  if (j.contains("name") && j.at("name").is_string())
    spec.name = j.at("name").get<std::string>();
  const json& gens = require(j, "generators");
  if (!gens.is_array())
    fail_validation("'generators' must be an array");
  for (const auto& g : gens) {
    const json& perm = require(g, "perm");
    const json& signs = require(g, "signs");
    const json& tr = require(g, "translation");
    if (!perm.is_array() || !signs.is_array() || !tr.is_array())
      fail_validation("generator fields must be arrays");
    if (static_cast<int>(perm.size()) != spec.dim || static_cast<int>(signs.size()) != spec.dim ||
        static_cast<int>(tr.size()) != spec.dim)
      fail_validation("generator field lengths must equal dim=" + std::to_string(spec.dim));
    std::vector<int> p, s;
    Translation t;
    for (const auto& x : perm) {
      if (!x.is_number_integer())
        fail_validation("'perm' entries must be integers");
      p.push_back(x.get<int>() - 1);
    }
    for (const auto& x : signs) {
      if (!x.is_number_integer())
        fail_validation("'signs' entries must be +1 or -1");
      s.push_back(x.get<int>());
    }
    for (const auto& x : tr)
      t.push_back(rational_from_json(x));
    spec.generators.emplace_back(SignedPermutation(std::move(p), std::move(s)), std::move(t));
  }
  return spec;
}

json to_json(const IsometryElement& e) {
  json perm = json::array(), signs = json::array(), tr = json::array();
  for (int j = 0; j < e.dim(); ++j) {
    perm.push_back(e.linear.image(j) + 1);
    signs.push_back(e.linear.sign(j));
    tr.push_back(to_json(e.translation[j]));
  }
  return {{"perm", std::move(perm)}, {"signs", std::move(signs)}, {"translation", std::move(tr)}};
}

json to_json(const SpaceGroup& g) {
  json gens = json::array();
  for (const auto& e : g.generators())
    gens.push_back(to_json(e));
  return {{"dim", g.dim()}, {"name", g.name()}, {"generators", std::move(gens)}};
}

json to_json(const HolonomyClass& c) {
  json j = {{"kind", to_string(c.kind)}, {"order", c.order}, {"abelian", c.abelian}};
  if (c.kind == HolonomyKind::ElementaryAbelian2)
    j["rank"] = c.rank;
  if (!c.name.empty())
    j["name"] = c.name;
  return j;
}

json to_json(const ValidationReport& r) {
  json j = {{"accepted", r.accepted()},
            {"closure", r.closure},
            {"cocycle", r.cocycle},
            {"torsion_free", r.torsion_free},
            {"holonomy_order", r.holonomy_order}};
  if (r.cocycle) {
    j["holonomy"] = to_json(r.holonomy);
    j["diagonal_type"] = r.diagonal_type;
    j["orientable"] = r.orientable;
  }
  j["errors"] = r.errors;
  return j;
}

json to_json(const MultiplicityRow& row) {
  json d = json::array();
  for (const auto& x : row.d)
    d.push_back(to_json(x));
  return {{"group", row.group}, {"N", row.norm_sq},    {"d", std::move(d)},
          {"d_f", to_json(row.d_f)}, {"d_e", to_json(row.d_e)}, {"d_o", to_json(row.d_o)}};
}

namespace {

std::size_t max_degree(const std::vector<MultiplicityRow>& rows) {
  std::size_t m = 0;
  for (const auto& r : rows)
    m = std::max(m, r.d.size());
  return m;
}

}  // namespace

std::string rows_to_csv(const std::vector<MultiplicityRow>& rows) {
  std::ostringstream os;
  const std::size_t m = max_degree(rows);
  os << "group,N";
  for (std::size_t p = 0; p < m; ++p)
    os << ",d_" << p;
  os << ",d_f\n";
  for (const auto& r : rows) {
    os << r.group << "," << r.norm_sq;
    for (std::size_t p = 0; p < m; ++p)
      os << "," << (p < r.d.size() ? r.d[p].str() : "");
    os << "," << r.d_f << "\n";
  }
  return os.str();
}

std::string format_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c)
        width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : "  " + pad + row[c];
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string rows_to_table(const std::vector<MultiplicityRow>& rows) {
  std::ostringstream os;
  const std::size_t m = max_degree(rows);
  // One block per N, groups as rows.
  std::vector<long> norms;
  for (const auto& r : rows)
    if (std::find(norms.begin(), norms.end(), r.norm_sq) == norms.end())
      norms.push_back(r.norm_sq);
  for (std::size_t b = 0; b < norms.size(); ++b) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"N=" + std::to_string(norms[b])};
    for (std::size_t p = 0; p < m; ++p)
      header.push_back("d_" + std::to_string(p));
    header.insert(header.end(), {"d_f", "d_e", "d_o"});
    cells.push_back(std::move(header));
    for (const auto& r : rows) {
      if (r.norm_sq != norms[b])
        continue;
      std::vector<std::string> line{r.group};
      for (std::size_t p = 0; p < m; ++p)
        line.push_back(p < r.d.size() ? r.d[p].str() : "");
      line.insert(line.end(), {r.d_f.str(), r.d_e.str(), r.d_o.str()});
      cells.push_back(std::move(line));
    }
    if (b)
      os << "\n";
    os << format_table(cells);
  }
  return os.str();
}

json to_json(const KrawtchoukTable& t) {
  json values = json::array();
  for (const auto& row : t.values) {
    json r = json::array();
    for (const auto& x : row)
      r.push_back(to_json(x));
    values.push_back(std::move(r));
  }
  return {{"n", t.n}, {"values", std::move(values)}};
}

std::string krawtchouk_to_csv(const KrawtchoukTable& t) {
  std::ostringstream os;
  os << "p";
  for (int x = 0; x <= t.n; ++x)
    os << ",x=" << x;
  os << "\n";
  for (int p = 0; p <= t.n; ++p) {
    os << p;
    for (int x = 0; x <= t.n; ++x)
      os << "," << t(p, x);
    os << "\n";
  }
  return os.str();
}

std::string krawtchouk_to_table(const KrawtchoukTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"x"};
  for (int x = 0; x <= t.n; ++x)
    header.push_back(std::to_string(x));
  cells.push_back(std::move(header));
  for (int p = 0; p <= t.n; ++p) {
    std::vector<std::string> row{"K_" + std::to_string(p) + "^" + std::to_string(t.n) + "(x)"};
    for (int x = 0; x <= t.n; ++x)
      row.push_back(t(p, x).str());
    cells.push_back(std::move(row));
  }
  return format_table(cells);
}

json to_json(const TheoremReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"N", e.norm_sq},
                       {"shell_size", to_json(e.shell_size)},
                       {"d_f", to_json(e.d_f)},
                       {"d_e", to_json(e.d_e)},
                       {"d_o", to_json(e.d_o)},
                       {"expected_f", to_json(e.expected_f)},
                       {"expected_e_o", to_json(e.expected_half)},
                       {"pass", e.pass}});
  return {{"group", r.group}, {"n", r.n},          {"k", r.k},
          {"passed", r.passed()}, {"failures", r.failures()}, {"entries", std::move(entries)}};
}

json to_json(const SpectrumVerdict& v) {
  json j = {{"equal", v.equal}, {"max_N", v.max_norm_sq}};
  if (!v.equal) {
    j["N"] = v.norm_sq;
    j["mode"] = v.mode;
    j["value1"] = to_json(v.value1);
    j["value2"] = to_json(v.value2);
  } else {
    j["mode"] = v.mode;
  }
  return j;
}

json to_json(const GhwGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges())
    edges.push_back({i + 1, j + 1});
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

GhwGraph graph_from_json(const json& j) {
  const json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 1)
    fail_validation("'n' must be a positive integer");
  GhwGraph g(n.get<int>());
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail_validation("edges must be pairs of vertex numbers");
    g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return g;
}

json to_json(const GhwArray& a) {
  json rows = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json r = json::array();
    for (int j = 0; j < a.dim(); ++j)
      r.push_back(to_json(a.entry(i, j)));
    rows.push_back(std::move(r));
  }
  return {{"n", a.dim()}, {"entries", std::move(rows)}};
}

GhwArray array_from_json(const json& j) {
  const json& rows = j.is_array() ? j : require(j, "entries");
  if (!rows.is_array())
    fail_validation("'entries' must be an array of rows");
  std::vector<std::vector<Rational4>> entries;
  for (const auto& row : rows) {
    if (!row.is_array())
      fail_validation("array rows must be arrays");
    std::vector<Rational4> r;
    for (const auto& x : row)
      r.push_back(rational_from_json(x));
    entries.push_back(std::move(r));
  }
  if (j.is_object() && j.contains("n") && j.at("n") != json(entries.size()))
    fail_validation("'n' does not match the number of rows");
  return GhwArray::from_entries(entries);
}

}  // namespace flatspec
