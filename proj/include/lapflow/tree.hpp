#pragma once

#include <vector>

#include "lapflow/graph.hpp"
#include "lapflow/operators.hpp"

namespace lapflow {

enum class TreeStrategy { Bfs, Dfs, LowStretchHeuristic };

struct SpanningTree {
  VertexId root = 0;
  // parent_vertex[root] = -1, parent_edge[root] = -1.
  std::vector<VertexId> parent_vertex;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;
  std::vector<char> in_tree;  // indexed by edge id
  std::vector<EdgeId> tree_edges;
  std::vector<EdgeId> non_tree_edges;
};

struct TreeBasis {
  std::vector<Cycle> cycles;  // one per non-tree edge, in non_tree_edges order
  double tau = 0.0;           // sum of cycle norms squared
  std::vector<double> cumulative_weights;
};

SpanningTree spanning_tree(const Graph& g, TreeStrategy strategy, VertexId root = 0);

// Signed path sums of a along tree paths from the root; result[root] = 0.
// On tree edges gradient(result) reproduces a exactly.
VertexFunction induced_potential(const Graph& g, const SpanningTree& t, const EdgeFunction& a);

// Tree-supported flow with divergence f, built by peeling vertices in
// decreasing depth order.
EdgeFunction feasible_flow(const Graph& g, const SpanningTree& t, const VertexFunction& f);

// Fundamental cycle of non-tree edge e: +1 on e, tree path from head(e)
// back to tail(e) signed by traversal direction.
Cycle tree_cycle(const Graph& g, const SpanningTree& t, EdgeId e);

TreeBasis tree_basis(const Graph& g, const SpanningTree& t);

}  // namespace lapflow
