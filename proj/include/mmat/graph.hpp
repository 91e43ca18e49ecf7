#pragma once

// Regular bipartite graphs read off an incidence matrix: treatments on the
// left, blocks on the right, one edge per 1-cell.

#include <utility>
#include <vector>

#include "mmat/design.hpp"

namespace mmat {

// Left vertices carry labels 1..v, right vertices v+1..v+b (blocks offset
// into a disjoint namespace). Edges are stored sorted by (left, right).
struct BipartiteGraph {
  Int v = 0;  // left part size
  Int b = 0;  // right part size
  std::vector<std::pair<Int, Int>> edges;
};

BipartiteGraph bipartite_graph(const IncidenceMatrix& inc);

struct RegularityReport {
  bool is_regular = false;
  Int degree = 0;  // meaningful only when is_regular
  Int left_size = 0;
  Int right_size = 0;
  Int edge_count = 0;
};

RegularityReport check_regular(const BipartiteGraph& g);

// Components as sorted vertex-label lists, ordered by smallest label.
std::vector<std::vector<Int>> connected_components(const BipartiteGraph& g);

// Inverse of bipartite_graph: the v x b 0/1 matrix the edge set encodes.
IntMatrix incidence_cells(const BipartiteGraph& g);

}  // namespace mmat
