#include "mmat/graph.hpp"

#include <algorithm>

namespace mmat {

BipartiteGraph bipartite_graph(const IncidenceMatrix& inc) {
  BipartiteGraph g;
  g.v = inc.v;
  g.b = inc.b;
  for (Int i = 0; i < inc.v; ++i) {
    for (Int j = 0; j < inc.b; ++j) {
      if (inc.cells(i, j) == 1) g.edges.push_back({i + 1, inc.v + j + 1});
    }
  }
  return g;
}

RegularityReport check_regular(const BipartiteGraph& g) {
  RegularityReport report;
  report.left_size = g.v;
  report.right_size = g.b;
  report.edge_count = static_cast<Int>(g.edges.size());

  std::vector<Int> degree(g.v + g.b, 0);
  for (const auto& [a, c] : g.edges) {
    degree[a - 1] += 1;
    degree[c - 1] += 1;
  }
  report.is_regular =
      std::all_of(degree.begin(), degree.end(),
                  [&](Int d) { return d == degree[0]; });
  if (report.is_regular && !degree.empty()) report.degree = degree[0];
  return report;
}

std::vector<std::vector<Int>> connected_components(const BipartiteGraph& g) {
  const Int total = g.v + g.b;
  std::vector<std::vector<Int>> adjacency(total);
  for (const auto& [a, c] : g.edges) {
    adjacency[a - 1].push_back(c);
    adjacency[c - 1].push_back(a);
  }

  std::vector<std::vector<Int>> components;
  std::vector<bool> visited(total, false);
  for (Int start = 1; start <= total; ++start) {
    if (visited[start - 1]) continue;
    std::vector<Int> component;
    std::vector<Int> stack{start};
    visited[start - 1] = true;
    while (!stack.empty()) {
      Int u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (Int w : adjacency[u - 1]) {
        if (!visited[w - 1]) {
          visited[w - 1] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

IntMatrix incidence_cells(const BipartiteGraph& g) {
  IntMatrix cells = IntMatrix::Zero(g.v, g.b);
  for (const auto& [a, c] : g.edges) cells(a - 1, c - g.v - 1) = 1;
  return cells;
}

}  // namespace mmat
