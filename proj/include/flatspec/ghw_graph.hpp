#ifndef FLATSPEC_GHW_GRAPH_HPP_
#define FLATSPEC_GHW_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatspec/families.hpp"

namespace flatspec {

/// Directed graph on vertices v_1..v_n (0-based internally), loops allowed.
class GhwGraph {
 public:
  GhwGraph() = default;
  explicit GhwGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}
  GhwGraph(int n, std::span<const std::pair<int, int>> edges);

  int size() const { return n_; }
  bool has_edge(int from, int to) const { return adj_[static_cast<std::size_t>(from) * n_ + to] != 0; }
  void add_edge(int from, int to);

  /// Lexicographically sorted edge list.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> out_neighbors(int v) const;

  /// Graph with vertex order[k] renamed to k.
  GhwGraph relabeled(std::span<const int> order) const;

  friend bool operator==(const GhwGraph&, const GhwGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Edge i -> j iff entry (i, j) of the array is 1/2.
GhwGraph graph_of(const GhwArray& a);

/// Inverse of graph_of on graphs whose vertices are already in canonical
/// order. Throws ValidationError if the result is not a valid GHW array.
GhwArray array_of(const GhwGraph& g);

/// order[k] is the vertex playing the role of v_{k+1}: v_n is the unique
/// vertex with a loop, and walking down, v_{i-1} is the unique out-neighbour
/// of v_i not yet identified. Throws ValidationError if a step is ambiguous or
/// the relabelled graph is not the graph of a K_n array.
std::vector<int> canonical_vertex_order(const GhwGraph& g);

/// Isomorphism of K_n graphs reduces to equality after canonical relabelling.
bool graphs_isomorphic(const GhwGraph& a, const GhwGraph& b);

std::string to_dot(const GhwGraph& g, std::string_view name = "ghw");

}  // namespace flatspec

#endif  // FLATSPEC_GHW_GRAPH_HPP_
