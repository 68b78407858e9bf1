#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lapflow/error.hpp"

namespace lapflow {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed graph. Validated at construction: no self-loops,
// no 2-cycles or parallel edges, connected undirected support.
class Graph {
 public:
  Graph(VertexId n, std::vector<Edge> edges);

  VertexId num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<EdgeId>& outgoing(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<EdgeId>& incoming(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }

  // Edge id for the directed pair (a,b), or -1 if absent.
  EdgeId find_edge(VertexId a, VertexId b) const;

  // Endpoint of e opposite to v.
  VertexId other_endpoint(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.tail == v ? ed.head : ed.tail;
  }

 private:
  VertexId n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

struct VertexFunction {
  std::vector<double> values;

  VertexFunction() = default;
  explicit VertexFunction(std::size_t n, double fill = 0.0) : values(n, fill) {}
  VertexFunction(std::initializer_list<double> init) : values(init) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  const double* data() const { return values.data(); }
  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;
};

struct EdgeFunction {
  std::vector<double> values;

  EdgeFunction() = default;
  explicit EdgeFunction(std::size_t m, double fill = 0.0) : values(m, fill) {}
  EdgeFunction(std::initializer_list<double> init) : values(init) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  const double* data() const { return values.data(); }
  friend bool operator==(const EdgeFunction&, const EdgeFunction&) = default;
};

Graph build_graph(VertexId n, const std::vector<Edge>& edge_list);

double inner_product(const VertexFunction& f, const VertexFunction& g);
double inner_product(const EdgeFunction& f, const EdgeFunction& g);
double norm_squared(const VertexFunction& f);
double norm_squared(const EdgeFunction& f);

}  // namespace lapflow
