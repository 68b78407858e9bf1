#include "lapflow/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lapflow {

namespace {

// Incident edge ids per vertex in edge-input order.
std::vector<std::vector<EdgeId>> incident_lists(const Graph& g) {
  std::vector<std::vector<EdgeId>> inc(static_cast<std::size_t>(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    inc[static_cast<std::size_t>(ed.tail)].push_back(e);
    inc[static_cast<std::size_t>(ed.head)].push_back(e);
  }
  return inc;
}

std::vector<int> bfs_depths(const Graph& g, const std::vector<std::vector<EdgeId>>& inc,
                            VertexId source) {
  std::vector<int> depth(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> queue{source};
  depth[static_cast<std::size_t>(source)] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    for (EdgeId e : inc[static_cast<std::size_t>(v)]) {
      VertexId w = g.other_endpoint(e, v);
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return depth;
}

VertexId farthest_vertex(const std::vector<int>& depth) {
  VertexId best = 0;
  for (std::size_t v = 1; v < depth.size(); ++v) {
    if (depth[v] > depth[static_cast<std::size_t>(best)]) best = static_cast<VertexId>(v);
  }
  return best;
}

SpanningTree finalize(const Graph& g, VertexId root, std::vector<VertexId> parent_vertex,
                      std::vector<EdgeId> parent_edge, std::vector<int> depth) {
  SpanningTree t;
  t.root = root;
  t.parent_vertex = std::move(parent_vertex);
  t.parent_edge = std::move(parent_edge);
  t.depth = std::move(depth);
  t.in_tree.assign(static_cast<std::size_t>(g.num_edges()), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    EdgeId pe = t.parent_edge[static_cast<std::size_t>(v)];
    if (pe >= 0) t.in_tree[static_cast<std::size_t>(pe)] = 1;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.in_tree[static_cast<std::size_t>(e)]) {
      t.tree_edges.push_back(e);
    } else {
      t.non_tree_edges.push_back(e);
    }
  }
  return t;
}

SpanningTree bfs_tree(const Graph& g, const std::vector<std::vector<EdgeId>>& inc, VertexId root) {
  std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<VertexId> parent_vertex(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<VertexId> queue{root};
  depth[static_cast<std::size_t>(root)] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    for (EdgeId e : inc[static_cast<std::size_t>(v)]) {
      VertexId w = g.other_endpoint(e, v);
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent_vertex[static_cast<std::size_t>(w)] = v;
        parent_edge[static_cast<std::size_t>(w)] = e;
        queue.push_back(w);
      }
    }
  }
  return finalize(g, root, std::move(parent_vertex), std::move(parent_edge), std::move(depth));
}

SpanningTree dfs_tree(const Graph& g, const std::vector<std::vector<EdgeId>>& inc, VertexId root) {
  std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<VertexId> parent_vertex(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  depth[static_cast<std::size_t>(root)] = 0;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    const auto& edges = inc[static_cast<std::size_t>(v)];
    if (idx >= edges.size()) {
      stack.pop_back();
      continue;
    }
    EdgeId e = edges[idx++];
    VertexId w = g.other_endpoint(e, v);
    if (depth[static_cast<std::size_t>(w)] < 0) {
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      parent_vertex[static_cast<std::size_t>(w)] = v;
      parent_edge[static_cast<std::size_t>(w)] = e;
      stack.emplace_back(w, 0);
    }
  }
  return finalize(g, root, std::move(parent_vertex), std::move(parent_edge), std::move(depth));
}

}  // namespace

SpanningTree spanning_tree(const Graph& g, TreeStrategy strategy, VertexId root) {
  if (root < 0 || root >= g.num_vertices()) {
    throw Error(ErrorKind::VertexOutOfRange, "tree root " + std::to_string(root));
  }
  auto inc = incident_lists(g);
  switch (strategy) {
    case TreeStrategy::Bfs:
      return bfs_tree(g, inc, root);
    case TreeStrategy::Dfs:
      return dfs_tree(g, inc, root);
    case TreeStrategy::LowStretchHeuristic: {
      // Root at an approximate center found by a double BFS sweep; the
      // requested root only breaks ties through the BFS start.
      auto d0 = bfs_depths(g, inc, root);
      VertexId x = farthest_vertex(d0);
      auto dx = bfs_depths(g, inc, x);
      VertexId y = farthest_vertex(dx);
      auto dy = bfs_depths(g, inc, y);
      VertexId best = 0;
      int best_ecc = std::max(dx[0], dy[0]);
      for (VertexId v = 1; v < g.num_vertices(); ++v) {
        int ecc = std::max(dx[static_cast<std::size_t>(v)], dy[static_cast<std::size_t>(v)]);
        if (ecc < best_ecc) {
          best = v;
          best_ecc = ecc;
        }
      }
      return bfs_tree(g, inc, best);
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown tree strategy");
}

VertexFunction induced_potential(const Graph& g, const SpanningTree& t, const EdgeFunction& a) {
  if (a.size() != static_cast<std::size_t>(g.num_edges())) {
    throw Error(ErrorKind::DomainMismatch, "edge function length " + std::to_string(a.size()));
  }
  std::size_t n = static_cast<std::size_t>(g.num_vertices());
  // Vertices in increasing depth order so parents are filled first.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    return t.depth[static_cast<std::size_t>(x)] < t.depth[static_cast<std::size_t>(y)];
  });
  VertexFunction u(n);
  for (VertexId v : order) {
    EdgeId pe = t.parent_edge[static_cast<std::size_t>(v)];
    if (pe < 0) continue;  // root
    VertexId p = t.parent_vertex[static_cast<std::size_t>(v)];
    double up = u[static_cast<std::size_t>(p)];
    // Plus sign when the edge points toward v along the walk from the root.
    if (g.edge(pe).head == v) {
      u[static_cast<std::size_t>(v)] = up + a[static_cast<std::size_t>(pe)];
    } else {
      u[static_cast<std::size_t>(v)] = up - a[static_cast<std::size_t>(pe)];
    }
  }
  return u;
}

EdgeFunction feasible_flow(const Graph& g, const SpanningTree& t, const VertexFunction& f) {
  if (f.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw Error(ErrorKind::DomainMismatch, "vertex function length " + std::to_string(f.size()));
  }
  if (!check_compatibility(f)) {
    throw Error(ErrorKind::IncompatibleRHS, "(1, f) != 0");
  }
  std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    return t.depth[static_cast<std::size_t>(x)] > t.depth[static_cast<std::size_t>(y)];
  });
  std::vector<double> residual(f.values);
  EdgeFunction a(static_cast<std::size_t>(g.num_edges()));
  for (VertexId v : order) {
    EdgeId pe = t.parent_edge[static_cast<std::size_t>(v)];
    if (pe < 0) continue;  // root absorbs the remaining residual, which is ~0
    double r = residual[static_cast<std::size_t>(v)];
    a[static_cast<std::size_t>(pe)] = (g.edge(pe).tail == v) ? -r : r;
    residual[static_cast<std::size_t>(t.parent_vertex[static_cast<std::size_t>(v)])] += r;
  }
  return a;
}

Cycle tree_cycle(const Graph& g, const SpanningTree& t, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) {
    throw Error(ErrorKind::EdgeOutOfRange, "edge " + std::to_string(e));
  }
  if (t.in_tree[static_cast<std::size_t>(e)]) {
    throw Error(ErrorKind::EdgeInTree, "edge " + std::to_string(e) + " is a tree edge");
  }
  Cycle c;
  c.entries.push_back({e, +1});

  VertexId b = g.edge(e).head;
  VertexId a = g.edge(e).tail;
  std::vector<Cycle::Entry> down;  // a-side, collected bottom-up

  auto depth_of = [&](VertexId v) { return t.depth[static_cast<std::size_t>(v)]; };
  auto step_up = [&](VertexId& v) -> std::pair<EdgeId, VertexId> {
    EdgeId pe = t.parent_edge[static_cast<std::size_t>(v)];
    VertexId p = t.parent_vertex[static_cast<std::size_t>(v)];
    return {pe, p};
  };

  while (b != a) {
    if (depth_of(b) >= depth_of(a)) {
      // Travel b -> parent(b); +1 when the edge points the way we travel.
      auto [pe, p] = step_up(b);
      c.entries.push_back({pe, g.edge(pe).tail == b ? +1 : -1});
      b = p;
    } else {
      // Travel parent(a) -> a happens later on the cycle walk.
      auto [pe, p] = step_up(a);
      down.push_back({pe, g.edge(pe).head == a ? +1 : -1});
      a = p;
    }
  }
  c.entries.insert(c.entries.end(), down.rbegin(), down.rend());
  return c;
}

TreeBasis tree_basis(const Graph& g, const SpanningTree& t) {
  TreeBasis basis;
  basis.cycles.reserve(t.non_tree_edges.size());
  basis.cumulative_weights.reserve(t.non_tree_edges.size());
  double acc = 0.0;
  for (EdgeId e : t.non_tree_edges) {
    Cycle c = tree_cycle(g, t, e);
    acc += c.norm_squared();
    basis.cumulative_weights.push_back(acc);
    basis.cycles.push_back(std::move(c));
  }
  basis.tau = acc;
  return basis;
}

}  // namespace lapflow
