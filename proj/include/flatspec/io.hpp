#ifndef FLATSPEC_IO_HPP_
#define FLATSPEC_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "flatspec/crystal.hpp"
#include "flatspec/families.hpp"
#include "flatspec/ghw_graph.hpp"
#include "flatspec/lattice.hpp"
#include "flatspec/spectra.hpp"

namespace flatspec {

using json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings, Gaussian integers as {"re", "im"}.
// Integers become JSON numbers when they fit in 64 bits, strings otherwise.
json to_json(Rational4 r);
Rational4 rational_from_json(const json& j);
json to_json(const Integer& x);
json to_json(const GaussianInt& z);

json to_json(const Shell& s);

/// Group interchange format:
/// {"dim": n, "name": ..., "generators": [{"perm": [1-based images],
///   "signs": [+-1...], "translation": ["1/2", "0", ...]}]}
struct GroupSpec {
  int dim = 0;
  std::string name;
  std::vector<IsometryElement> generators;
};

GroupSpec group_spec_from_json(const json& j);
json to_json(const SpaceGroup& g);
json to_json(const IsometryElement& e);

json to_json(const HolonomyClass& c);
json to_json(const ValidationReport& r);

json to_json(const MultiplicityRow& row);
std::string rows_to_csv(const std::vector<MultiplicityRow>& rows);
std::string rows_to_table(const std::vector<MultiplicityRow>& rows);

json to_json(const KrawtchoukTable& t);
std::string krawtchouk_to_csv(const KrawtchoukTable& t);
std::string krawtchouk_to_table(const KrawtchoukTable& t);

json to_json(const TheoremReport& r);
json to_json(const SpectrumVerdict& v);

/// {"n": ..., "edges": [[i, j], ...]} with 1-based vertices.
json to_json(const GhwGraph& g);
GhwGraph graph_from_json(const json& j);

/// {"n": ..., "entries": [["0", "1/2", ...], ...]}; a bare array of rows is
/// also accepted on input.
json to_json(const GhwArray& a);
GhwArray array_from_json(const json& j);

/// Left-aligned first column, right-aligned remaining columns.
std::string format_table(const std::vector<std::vector<std::string>>& cells);

}  // namespace flatspec

#endif  // FLATSPEC_IO_HPP_
