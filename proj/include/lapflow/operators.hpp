#pragma once

#include <vector>

#include "lapflow/graph.hpp"

namespace lapflow {

// Sparse signed edge set representing a divergence-free +-1 function
// supported on a cycle.
struct Cycle {
  struct Entry {
    EdgeId edge;
    int sign;  // +1 or -1
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  double norm_squared() const { return static_cast<double>(entries.size()); }
  EdgeFunction to_edge_function(EdgeId m) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Pure cycle given as a closed vertex walk (a_1, ..., a_k); the closing
// step a_k -> a_1 is implicit. Requires k >= 3 and no undirected edge
// used twice.
struct ClosedWalk {
  std::vector<VertexId> vertices;
};

EdgeFunction gradient(const Graph& g, const VertexFunction& u);
VertexFunction divergence(const Graph& g, const EdgeFunction& a);
VertexFunction laplacian_apply(const Graph& g, const VertexFunction& u);

Cycle cycle_function(const Graph& g, const ClosedWalk& walk);

// Sparse inner product of a with each basis cycle.
std::vector<double> curl(const EdgeFunction& a, const std::vector<Cycle>& basis);
double curl_component(const EdgeFunction& a, const Cycle& c);

// True iff |sum f| <= tol * max(1, sum |f|).
bool check_compatibility(const VertexFunction& f, double tol = 1e-12);

}  // namespace lapflow
