#include "lapflow/operators.hpp"

#include <cmath>
#include <set>
#include <string>

#include "lapflow/kernels.hpp"

namespace lapflow {

EdgeFunction Cycle::to_edge_function(EdgeId m) const {
  EdgeFunction out(static_cast<std::size_t>(m));
  for (const Entry& en : entries) {
    if (en.edge < 0 || en.edge >= m) {
      throw Error(ErrorKind::EdgeOutOfRange, "cycle entry at edge " + std::to_string(en.edge));
    }
    out[static_cast<std::size_t>(en.edge)] = static_cast<double>(en.sign);
  }
  return out;
}

namespace {
void require_vertex_domain(const Graph& g, const VertexFunction& u) {
  if (u.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw Error(ErrorKind::DomainMismatch,
                "vertex function of length " + std::to_string(u.size()) + " on graph with n = " +
                    std::to_string(g.num_vertices()));
  }
}

void require_edge_domain(const Graph& g, const EdgeFunction& a) {
  if (a.size() != static_cast<std::size_t>(g.num_edges())) {
    throw Error(ErrorKind::DomainMismatch,
                "edge function of length " + std::to_string(a.size()) + " on graph with m = " +
                    std::to_string(g.num_edges()));
  }
}
}  // namespace

EdgeFunction gradient(const Graph& g, const VertexFunction& u) {
  require_vertex_domain(g, u);
  EdgeFunction out(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out[static_cast<std::size_t>(e)] =
        u[static_cast<std::size_t>(ed.head)] - u[static_cast<std::size_t>(ed.tail)];
  }
  return out;
}

VertexFunction divergence(const Graph& g, const EdgeFunction& a) {
  require_edge_domain(g, a);
  VertexFunction out(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    double v = a[static_cast<std::size_t>(e)];
    out[static_cast<std::size_t>(ed.head)] += v;
    out[static_cast<std::size_t>(ed.tail)] -= v;
  }
  return out;
}

VertexFunction laplacian_apply(const Graph& g, const VertexFunction& u) {
  require_vertex_domain(g, u);
  VertexFunction out(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    double d = u[static_cast<std::size_t>(ed.tail)] - u[static_cast<std::size_t>(ed.head)];
    out[static_cast<std::size_t>(ed.tail)] += d;
    out[static_cast<std::size_t>(ed.head)] -= d;
  }
  return out;
}

Cycle cycle_function(const Graph& g, const ClosedWalk& walk) {
  const auto& vs = walk.vertices;
  if (vs.size() < 3) {
    throw Error(ErrorKind::InvalidParams, "closed walk needs at least 3 vertices");
  }
  Cycle c;
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    VertexId a = vs[i];
    VertexId b = vs[(i + 1) % vs.size()];
    EdgeId e = g.find_edge(a, b);
    int sign = 1;
    if (e < 0) {
      e = g.find_edge(b, a);
      sign = -1;
    }
    if (e < 0) {
      throw Error(ErrorKind::NotAnEdge,
                  "no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    if (!used.insert(e).second) {
      throw Error(ErrorKind::RepeatedEdge, "edge " + std::to_string(e) + " traversed twice");
    }
    c.entries.push_back({e, sign});
  }
  return c;
}

double curl_component(const EdgeFunction& a, const Cycle& c) {
  double acc = 0.0;
  for (const Cycle::Entry& en : c.entries) {
    if (en.edge < 0 || static_cast<std::size_t>(en.edge) >= a.size()) {
      throw Error(ErrorKind::DomainMismatch, "cycle edge " + std::to_string(en.edge) +
                                                 " outside edge function of length " +
                                                 std::to_string(a.size()));
    }
    acc += static_cast<double>(en.sign) * a[static_cast<std::size_t>(en.edge)];
  }
  return acc;
}

std::vector<double> curl(const EdgeFunction& a, const std::vector<Cycle>& basis) {
  std::vector<double> out;
  out.reserve(basis.size());
  for (const Cycle& c : basis) out.push_back(curl_component(a, c));
  return out;
}

bool check_compatibility(const VertexFunction& f, double tol) {
  double s = kernels::sum(f.data(), f.size());
  double sa = kernels::sum_abs(f.data(), f.size());
  return std::abs(s) <= tol * std::max(1.0, sa);
}

}  // namespace lapflow
