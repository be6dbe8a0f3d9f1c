#include "flatspec/ghw_graph.hpp"

#include <sstream>

#include "flatspec/error.hpp"

namespace flatspec {

GhwGraph::GhwGraph(int n, std::span<const std::pair<int, int>> edges) : GhwGraph(n) {
  for (auto [from, to] : edges)
    add_edge(from, to);
}

void GhwGraph::add_edge(int from, int to) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_)
    fail_range("edge (" + std::to_string(from + 1) + "," + std::to_string(to + 1) +
               ") outside vertex range 1.." + std::to_string(n_));
  adj_[static_cast<std::size_t>(from) * n_ + to] = 1;
}

std::vector<std::pair<int, int>> GhwGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_edge(i, j))
        out.emplace_back(i, j);
  return out;
}

std::vector<int> GhwGraph::out_neighbors(int v) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (has_edge(v, j))
      out.push_back(j);
  return out;
}

GhwGraph GhwGraph::relabeled(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != n_)
    fail_range("relabeled: order has wrong length");
  std::vector<int> pos(n_, -1);
  for (int k = 0; k < n_; ++k)
    pos[order[k]] = k;
  GhwGraph g(n_);
  for (auto [i, j] : edges())
    g.add_edge(pos[i], pos[j]);
  return g;
}

GhwGraph graph_of(const GhwArray& a) {
  GhwGraph g(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a.half(i, j))
        g.add_edge(i, j);
  return g;
}

GhwArray array_of(const GhwGraph& g) {
  GhwArray a(g.size());
  for (auto [i, j] : g.edges())
    a.set_half(i, j, true);
  a.validate();
  return a;
}

std::vector<int> canonical_vertex_order(const GhwGraph& g) {
  const int n = g.size();
  if (n < 2)
    fail_validation("graph with fewer than 2 vertices is not a K_n graph");
  std::vector<int> loops;
  for (int v = 0; v < n; ++v)
    if (g.has_edge(v, v))
      loops.push_back(v);
  if (loops.size() != 1)
    fail_validation("not a K_n graph: expected exactly one vertex with a loop, found " +
                    std::to_string(loops.size()));
  std::vector<int> order(n, -1);
  std::vector<char> known(n, 0);
  order[n - 1] = loops.front();
  known[loops.front()] = 1;
  for (int k = n - 1; k >= 1; --k) {
    int next = -1;
    for (int w : g.out_neighbors(order[k])) {
      if (known[w])
        continue;
      if (next != -1)
        fail_validation("not a K_n graph: v" + std::to_string(k + 1) +
                        " has more than one arrow to an unidentified vertex");
      next = w;
    }
    if (next == -1)
      fail_validation("not a K_n graph: v" + std::to_string(k + 1) +
                      " has no arrow to an unidentified vertex");
    order[k - 1] = next;
    known[next] = 1;
  }
  GhwArray a(n);
  for (auto [i, j] : g.relabeled(order).edges())
    a.set_half(i, j, true);
  if (auto v = a.violations(); !v.empty())
    fail_validation("not a K_n graph: " + v.front());
  return order;
}

bool graphs_isomorphic(const GhwGraph& a, const GhwGraph& b) {
  if (a.size() != b.size())
    return false;
  return a.relabeled(canonical_vertex_order(a)) == b.relabeled(canonical_vertex_order(b));
}

std::string to_dot(const GhwGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v)
    os << "  v" << v + 1 << ";\n";
  for (auto [i, j] : g.edges())
    os << "  v" << i + 1 << " -> v" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace flatspec
