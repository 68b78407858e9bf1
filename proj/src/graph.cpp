#include "lapflow/graph.hpp"

#include <set>
#include <string>
#include <vector>

#include "lapflow/kernels.hpp"

namespace lapflow {

Graph::Graph(VertexId n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidParams, "vertex count must be positive");
  out_.resize(static_cast<std::size_t>(n_));
  in_.resize(static_cast<std::size_t>(n_));

  std::set<std::pair<VertexId, VertexId>> seen;  // normalized unordered pairs
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if (ed.tail < 0 || ed.tail >= n_ || ed.head < 0 || ed.head >= n_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(e) + " = (" + std::to_string(ed.tail) + "," +
                      std::to_string(ed.head) + ") with n = " + std::to_string(n_));
    }
    if (ed.tail == ed.head) {
      throw Error(ErrorKind::LoopEdge,
                  "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(ed.tail));
    }
    auto key = std::minmax(ed.tail, ed.head);
    if (!seen.insert(key).second) {
      throw Error(ErrorKind::TwoCycleOrParallelEdge,
                  "edge " + std::to_string(e) + " = (" + std::to_string(ed.tail) + "," +
                      std::to_string(ed.head) + ") duplicates an earlier pair");
    }
    out_[static_cast<std::size_t>(ed.tail)].push_back(e);
    in_[static_cast<std::size_t>(ed.head)].push_back(e);
  }

  // Connectivity of the undirected support, BFS from vertex 0.
  std::vector<char> visited(static_cast<std::size_t>(n_), 0);
  std::vector<VertexId> queue{0};
  visited[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    auto visit = [&](EdgeId e) {
      VertexId w = other_endpoint(e, v);
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    };
    for (EdgeId e : outgoing(v)) visit(e);
    for (EdgeId e : incoming(v)) visit(e);
  }
  for (VertexId v = 0; v < n_; ++v) {
    if (!visited[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::Disconnected,
                  "vertex " + std::to_string(v) + " unreachable from vertex 0");
    }
  }
}

EdgeId Graph::find_edge(VertexId a, VertexId b) const {
  for (EdgeId e : outgoing(a)) {
    if (edge(e).head == b) return e;
  }
  return -1;
}

Graph build_graph(VertexId n, const std::vector<Edge>& edge_list) {
  return Graph(n, edge_list);
}

namespace {
double dot_checked(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DomainMismatch, "inner product of lengths " +
                                               std::to_string(a.size()) + " and " +
                                               std::to_string(b.size()));
  }
  return kernels::dot(a.data(), b.data(), a.size());
}
}  // namespace

double inner_product(const VertexFunction& f, const VertexFunction& g) {
  return dot_checked(f.values, g.values);
}

double inner_product(const EdgeFunction& f, const EdgeFunction& g) {
  return dot_checked(f.values, g.values);
}

double norm_squared(const VertexFunction& f) { return inner_product(f, f); }
double norm_squared(const EdgeFunction& f) { return inner_product(f, f); }

}  // namespace lapflow
