// flatspec: command-line front end for the flat-manifold spectral toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "flatspec/flatspec.hpp"

namespace fs = std::filesystem;
using namespace flatspec;

namespace {

enum class Format { Table, Csv, Json };

// A group input that failed validation; carries the report for output.
struct GroupInputError : Error {
  GroupInputError(const std::string& msg, ValidationReport r) : Error(msg), report(std::move(r)) {}
  ValidationReport report;
};

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

GroupSpec spec_of(const std::string& ref) {
  if (fs::exists(ref))
    return group_spec_from_json(read_json_file(ref));
  BieberbachGroup g = resolve_group(ref);
  return {g.dim(), g.name(), g.generators()};
}

BieberbachGroup load_group(const std::string& ref) {
  if (!fs::exists(ref))
    return resolve_group(ref);
  GroupSpec spec = group_spec_from_json(read_json_file(ref));
  ValidationReport rep = validate(spec.generators, spec.dim);
  if (!rep.accepted())
    throw GroupInputError(ref + " is not a Bieberbach group", rep);
  auto g = BieberbachGroup::from_generators(spec.generators, spec.dim,
                                            spec.name.empty() ? ref : spec.name);
  return g;
}

std::vector<BieberbachGroup> load_groups(const std::vector<std::string>& refs) {
  std::vector<BieberbachGroup> out;
  for (const auto& r : refs)
    out.push_back(load_group(r));
  return out;
}

void add_format_flags(CLI::App* app, Format& fmt) {
  auto* csv = app->add_flag_callback("--csv", [&fmt] { fmt = Format::Csv; }, "CSV output");
  auto* js = app->add_flag_callback("--json", [&fmt] { fmt = Format::Json; }, "JSON output");
  csv->excludes(js);
}

int cmd_validate(const std::string& ref) {
  GroupSpec spec = spec_of(ref);
  ValidationReport rep = validate(spec.generators, spec.dim);
  json j = to_json(rep);
  if (!spec.name.empty())
    j["name"] = spec.name;
  j["dim"] = spec.dim;
  std::cout << j.dump(2) << "\n";
  return rep.accepted() ? 0 : 1;
}

int cmd_krawtchouk(int n, Format fmt) {
  KrawtchoukTable t = krawtchouk_table(n);
  switch (fmt) {
    case Format::Csv: std::cout << krawtchouk_to_csv(t); break;
    case Format::Json: std::cout << to_json(t).dump() << "\n"; break;
    default: std::cout << krawtchouk_to_table(t);
  }
  return 0;
}

std::vector<long> norm_list(const std::vector<long>& norms, long upto) {
  std::vector<long> out = norms;
  for (long N = 0; N <= upto; ++N)
    out.push_back(N);
  if (out.empty())
    out.push_back(1);
  return out;
}

int cmd_characters(const std::vector<BieberbachGroup>& groups, const std::vector<long>& norms,
                   Format fmt, long cap) {
  std::vector<std::vector<std::string>> cells{{"group", "N", "element", "linear", "translation", "e"}};
  json out = json::array();
  for (long N : norms)
    for (const auto& g : groups) {
      Shell shell = shell_vectors(g.dim(), N, cap);
      const auto& reps = g.representatives();
      for (std::size_t i = 0; i < reps.size(); ++i) {
        GaussianInt e = character_sum(reps[i], shell);
        std::string tr;
        for (std::size_t k = 0; k < reps[i].translation.size(); ++k)
          tr += (k ? " " : "") + reps[i].translation[k].str();
        cells.push_back({g.name(), std::to_string(N), std::to_string(i), reps[i].linear.str(), tr,
                         e.str()});
        json row = {{"group", g.name()}, {"N", N}, {"element", i}};
        row["representative"] = to_json(reps[i]);
        row["e"] = to_json(e);
        out.push_back(std::move(row));
      }
    }
  if (fmt == Format::Json) {
    std::cout << out.dump() << "\n";
  } else if (fmt == Format::Csv) {
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c)
        std::cout << (c ? "," : "") << row[c];
      std::cout << "\n";
    }
  } else {
    std::cout << format_table(cells);
  }
  return 0;
}

int cmd_spectrum(const std::vector<std::string>& refs, const std::vector<long>& norms, long upto,
                 bool characters, Format fmt) {
  const long cap = shell_cap_from_env();
  auto groups = load_groups(refs);
  auto list = norm_list(norms, upto);
  if (characters)
    return cmd_characters(groups, list, fmt, cap);
  std::vector<MultiplicityRow> rows;
  for (long N : list)
    for (const auto& g : groups)
      rows.push_back(multiplicities(g, N, cap));
  switch (fmt) {
    case Format::Csv: std::cout << rows_to_csv(rows); break;
    case Format::Json: {
      json j = json::array();
      for (const auto& r : rows)
        j.push_back(to_json(r));
      std::cout << j.dump() << "\n";
      break;
    }
    default: std::cout << rows_to_table(rows);
  }
  return 0;
}

int cmd_betti(const std::vector<std::string>& refs, Format fmt) {
  auto groups = load_groups(refs);
  std::size_t width = 0;
  for (const auto& g : groups)
    width = std::max<std::size_t>(width, g.dim() + 1);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"group"};
  for (std::size_t p = 0; p < width; ++p)
    header.push_back("b_" + std::to_string(p));
  header.push_back("total");
  cells.push_back(header);
  json out = json::array();
  for (const auto& g : groups) {
    auto b = betti_numbers(g);
    Integer total = 0;
    std::vector<std::string> row{g.name()};
    json jb = json::array();
    for (std::size_t p = 0; p < width; ++p) {
      row.push_back(p < b.size() ? b[p].str() : "");
      if (p < b.size()) {
        total += b[p];
        jb.push_back(to_json(b[p]));
      }
    }
    row.push_back(total.str());
    cells.push_back(std::move(row));
    out.push_back({{"group", g.name()}, {"betti", std::move(jb)}, {"total", to_json(total)}});
  }
  if (fmt == Format::Json) {
    std::cout << out.dump() << "\n";
  } else if (fmt == Format::Csv) {
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c)
        std::cout << (c ? "," : "") << row[c];
      std::cout << "\n";
    }
  } else {
    std::cout << format_table(cells);
  }
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& mode, long max_n,
                const std::string& expect, bool as_json) {
  auto g1 = load_group(a);
  auto g2 = load_group(b);
  SpectrumVerdict v = compare_spectra(g1, g2, CompareMode::parse(mode), max_n, shell_cap_from_env());
  if (as_json) {
    json j = to_json(v);
    j["group1"] = g1.name();
    j["group2"] = g2.name();
    std::cout << j.dump() << "\n";
  } else if (v.equal) {
    std::cout << g1.name() << " vs " << g2.name() << ": equal in mode " << v.mode << " for N <= "
              << max_n << "\n";
  } else {
    std::cout << g1.name() << " vs " << g2.name() << ": unequal at N=" << v.norm_sq << " mode "
              << v.mode << " (" << v.value1 << " vs " << v.value2 << ")\n";
  }
  if (expect.empty())
    return 0;
  return (expect == "equal") == v.equal ? 0 : 1;
}

int cmd_family(const std::string& kind, int n, bool count_only, long verify, bool graphs,
               bool as_json) {
  std::vector<BieberbachGroup> groups;
  std::vector<GhwArray> arrays;
  if (kind == "z2") {
    if (count_only) {
      std::cout << z2_family_size(n) << "\n";
      return 0;
    }
    groups = z2_family(n);
  } else if (kind == "kn") {
    arrays = kn_arrays(n);
    if (count_only) {
      std::cout << arrays.size() << "\n";
      return 0;
    }
    if (graphs) {
      for (const auto& a : arrays) {
        std::string name = "kn_" + std::to_string(n) + "_" + std::to_string(a.index());
        if (as_json)
          std::cout << to_json(graph_of(a)).dump() << "\n";
        else
          std::cout << to_dot(graph_of(a), name);
      }
      return 0;
    }
    for (const auto& a : arrays)
      groups.push_back(kn_group_from_array(a));
  } else if (kind == "hw-catalog") {
    // dimension 3 has exactly one HW manifold
    groups = n == 3 ? std::vector<BieberbachGroup>{catalog("hw3/M1")} : hw_examples(n);
    if (count_only) {
      std::cout << groups.size() << "\n";
      return 0;
    }
  } else {
    fail_range("unknown family kind '" + kind + "' (expected z2, kn or hw-catalog)");
  }
  if (graphs)
    fail_range("--graphs is only available for the kn family");

  if (verify >= 0) {
    const long cap = shell_cap_from_env();
    int failed = 0;
    json reports = json::array();
    for (const auto& g : groups) {
      TheoremReport r = theorem_check(g, verify, cap);
      failed += !r.passed();
      if (as_json)
        reports.push_back(to_json(r));
      else
        std::cout << g.name() << " k=" << r.k << " N=0.." << verify << " "
                  << (r.passed() ? "pass" : "FAIL (" + std::to_string(r.failures()) + " N values)")
                  << "\n";
    }
    if (as_json)
      std::cout << json{{"groups", groups.size()}, {"failed", failed}, {"reports", reports}}.dump()
                << "\n";
    else
      std::cout << groups.size() << " groups, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
  }

  std::cout << "[\n";
  for (std::size_t i = 0; i < groups.size(); ++i)
    std::cout << "  " << to_json(groups[i]).dump() << (i + 1 < groups.size() ? ",\n" : "\n");
  std::cout << "]\n";
  return 0;
}

int cmd_graph(const std::string& input, bool as_json, bool canonical) {
  GhwGraph g;
  std::string name = "ghw";
  if (fs::exists(input)) {
    json j = read_json_file(input);
    if (j.is_object() && j.contains("edges")) {
      g = graph_from_json(j);
    } else {
      GhwArray a = array_from_json(j);
      a.validate();
      g = graph_of(a);
    }
  } else {
    if (!input.starts_with("kn/"))
      fail_validation("graph input must be a kn/<n>/<index> reference or a JSON file");
    resolve_group(input);  // validates the reference
    auto slash = input.find('/', 3);
    int n = std::stoi(input.substr(3, slash - 3));
    g = graph_of(GhwArray::from_index(n, std::stoull(input.substr(slash + 1))));
    name = "kn_" + std::to_string(n) + "_" + input.substr(slash + 1);
  }
  if (canonical) {
    auto order = canonical_vertex_order(g);
    g = g.relabeled(order);
    if (as_json) {
      json j = to_json(g);
      json o = json::array();
      for (int v : order)
        o.push_back(v + 1);
      j["order"] = std::move(o);
      j["array"] = to_json(array_of(g))["entries"];
      std::cout << j.dump() << "\n";
      return 0;
    }
  }
  if (as_json)
    std::cout << to_json(g).dump() << "\n";
  else
    std::cout << to_dot(g, name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hodge-Laplace spectra of compact flat manifolds"};
  app.require_subcommand(1);

  std::string ref;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a group and print a JSON report");
  validate_cmd->add_option("group", ref, "group JSON file or group reference")->required();

  int kn = 3;
  Format kfmt = Format::Table;
  auto* kraw = app.add_subcommand("krawtchouk", "Table of K_p^n(x), 0 <= p, x <= n");
  kraw->add_option("-n", kn, "degree bound n (1..64)")->required();
  add_format_flags(kraw, kfmt);

  std::vector<std::string> refs;
  std::vector<long> norms;
  long upto = -1;
  bool characters = false;
  Format sfmt = Format::Table;
  auto* spec = app.add_subcommand("spectrum", "Multiplicities d_p, d_f, d_e, d_o at given N");
  spec->add_option("groups", refs, "group JSON files or references")->required();
  spec->add_option("-N,--norm", norms, "squared norms (comma separated)")->delimiter(',');
  spec->add_option("--upto", upto, "also include every N from 0 to this value");
  spec->add_flag("--characters", characters, "print character sums e_{N,gamma} instead");
  add_format_flags(spec, sfmt);

  std::vector<std::string> brefs;
  Format bfmt = Format::Table;
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers (multiplicities at N = 0)");
  betti_cmd->add_option("groups", brefs, "group JSON files or references")->required();
  add_format_flags(betti_cmd, bfmt);

  std::string g1, g2, mode = "f", expect;
  long max_n = 25;
  bool cjson = false;
  auto* cmp = app.add_subcommand("compare", "Compare two spectra up to a squared norm");
  cmp->add_option("group1", g1)->required();
  cmp->add_option("group2", g2)->required();
  cmp->add_option("--mode", mode, "p, p=<p>, f, e, o, functions or all")->capture_default_str();
  cmp->add_option("--max-N", max_n, "largest squared norm scanned")->capture_default_str();
  cmp->add_option("--expect", expect, "exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"equal", "unequal"}));
  cmp->add_flag("--json", cjson, "JSON output");

  std::string kind;
  int fam_n = 3;
  bool count_only = false, graphs = false, fjson = false;
  long verify = -1;
  auto* fam = app.add_subcommand("family", "Enumerate a manifold family");
  fam->add_option("kind", kind, "z2, kn or hw-catalog")->required();
  fam->add_option("-n", fam_n, "dimension")->required();
  fam->add_flag("--count-only", count_only, "print the number of groups only");
  fam->add_option("--verify-theorem", verify, "check d_f = 2^{n-k}|shell| for N = 0..value");
  fam->add_flag("--graphs", graphs, "print the directed graphs (kn only)");
  fam->add_flag("--json", fjson, "JSON output where applicable");

  std::string graph_input;
  bool gjson = false, canonical = false;
  auto* graph = app.add_subcommand("graph", "Directed graph of a K_n array");
  graph->add_option("input", graph_input, "kn/<n>/<index>, array JSON or graph JSON")->required();
  graph->add_flag("--json", gjson, "JSON edge list instead of DOT");
  graph->add_flag("--canonical", canonical, "relabel vertices into canonical order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd)
      return cmd_validate(ref);
    if (*kraw)
      return cmd_krawtchouk(kn, kfmt);
    if (*spec)
      return cmd_spectrum(refs, norms, upto, characters, sfmt);
    if (*betti_cmd)
      return cmd_betti(brefs, bfmt);
    if (*cmp)
      return cmd_compare(g1, g2, mode, max_n, expect, cjson);
    if (*fam)
      return cmd_family(kind, fam_n, count_only, verify, graphs, fjson);
    if (*graph)
      return cmd_graph(graph_input, gjson, canonical);
  } catch (const GroupInputError& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}, {"report", to_json(e.report)}}
                     .dump()
              << "\n";
    return 2;
  } catch (const Error& e) {
    std::string type = dynamic_cast<const ResourceError*>(&e)     ? "resource"
                       : dynamic_cast<const RangeError*>(&e)      ? "range"
                       : dynamic_cast<const ValidationError*>(&e) ? "validation"
                       : dynamic_cast<const IntegrityError*>(&e)  ? "integrity"
                                                                  : "error";
    std::cerr << json{{"error", type}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
