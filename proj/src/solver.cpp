#include "lapflow/solver.hpp"

#include <algorithm>
#include <cmath>

#include "lapflow/kernels.hpp"

namespace lapflow {

CycleUpdate cycle_update(EdgeFunction& a, const Cycle& c) {
  if (c.entries.empty()) throw Error(ErrorKind::EmptyCycle, "cycle update with empty cycle");
  double ac = curl_component(a, c);
  double len = c.norm_squared();
  double alpha = -ac / len;
  for (const Cycle::Entry& en : c.entries) {
    a[static_cast<std::size_t>(en.edge)] += alpha * static_cast<double>(en.sign);
  }
  return {alpha, -ac * ac / len};
}

double gap(const Graph&, const SpanningTree&, const TreeBasis& basis, const EdgeFunction& a,
           const VertexFunction&) {
  double acc = 0.0;
  for (const Cycle& c : basis.cycles) {
    double v = curl_component(a, c);
    acc += v * v;
  }
  return acc;
}

double gap_slow(const Graph& g, const SpanningTree& t, const EdgeFunction& a,
                const VertexFunction& f) {
  VertexFunction u = induced_potential(g, t, a);
  EdgeFunction du = gradient(g, u);
  return norm_squared(a) - (2.0 * inner_product(u, f) - norm_squared(du));
}

double gap_offtree(const Graph& g, const SpanningTree& t, const EdgeFunction& a) {
  VertexFunction u = induced_potential(g, t, a);
  EdgeFunction du = gradient(g, u);
  double acc = 0.0;
  for (EdgeId e : t.non_tree_edges) {
    double d = a[static_cast<std::size_t>(e)] - du[static_cast<std::size_t>(e)];
    acc += d * d;
  }
  return acc;
}

std::size_t sample_cycle(const TreeBasis& basis, Rng& rng) {
  if (basis.cycles.empty()) throw Error(ErrorKind::EmptyBasis, "sampling from empty basis");
  // 53-bit uniform in [0, 1); avoids distribution objects whose output is
  // implementation defined.
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double target = u * basis.tau;
  auto it = std::upper_bound(basis.cumulative_weights.begin(), basis.cumulative_weights.end(),
                             target);
  if (it == basis.cumulative_weights.end()) --it;
  return static_cast<std::size_t>(it - basis.cumulative_weights.begin());
}

VertexFunction extract_potentials(const Graph& g, const SpanningTree& t, const EdgeFunction& a) {
  VertexFunction u = induced_potential(g, t, a);
  double mean = kernels::sum(u.data(), u.size()) / static_cast<double>(u.size());
  for (double& v : u.values) v -= mean;
  return u;
}

SolveResult solve(const Graph& g, const VertexFunction& f, const SolverConfig& cfg) {
  if (cfg.tol <= 0 || cfg.max_iters < 0 || cfg.gap_check_every < 0) {
    throw Error(ErrorKind::InvalidParams, "bad solver configuration");
  }
  if (!check_compatibility(f)) {
    throw Error(ErrorKind::IncompatibleRHS, "(1, f) != 0");
  }

  SpanningTree t = spanning_tree(g, cfg.tree_strategy, cfg.root);
  TreeBasis basis = tree_basis(g, t);

  SolveResult res;
  res.seed = cfg.seed;
  res.tau = basis.tau;
  res.flow = feasible_flow(g, t, f);

  double energy = norm_squared(res.flow);
  const double initial_energy = energy;
  constexpr double kTinyAbs = 1e-30;
  // The extra n*m factor keeps the certified potential error
  // |u - u*|_inf <= sqrt(n * gap) well inside tol-level accuracy; the gap
  // alone only bounds the energy error.
  const double n_times_m =
      static_cast<double>(g.num_vertices()) * static_cast<double>(g.num_edges());
  const double size_factor = 1.0 + n_times_m * static_cast<double>(g.num_vertices());
  const double stop_threshold = cfg.tol * std::max(initial_energy, kTinyAbs) / size_factor;
  std::int64_t cadence =
      cfg.gap_check_every > 0 ? cfg.gap_check_every : std::max<EdgeId>(g.num_edges(), 1);

  Rng rng(cfg.seed);
  std::int64_t iter = 0;
  std::size_t sweep_pos = 0;
  double cur_gap = gap(g, t, basis, res.flow, f);
  res.trace.push_back({iter, energy, cur_gap});

  bool done = basis.cycles.empty() || cur_gap <= stop_threshold;
  while (!done && iter < cfg.max_iters) {
    std::int64_t burst = std::min(cadence, cfg.max_iters - iter);
    for (std::int64_t k = 0; k < burst; ++k) {
      const Cycle& c = cfg.mode == SolveMode::Random
                           ? basis.cycles[sample_cycle(basis, rng)]
                           : basis.cycles[sweep_pos++ % basis.cycles.size()];
      CycleUpdate up = cycle_update(res.flow, c);
      energy += up.delta_energy;
    }
    iter += burst;
    // Recompute energy exactly at each gap check to shed accumulation drift.
    energy = norm_squared(res.flow);
    cur_gap = gap(g, t, basis, res.flow, f);
    res.trace.push_back({iter, energy, cur_gap});
    done = cur_gap <= stop_threshold;
  }

  res.iterations = iter;
  res.termination = done ? Termination::Converged : Termination::MaxIters;
  res.final_energy = energy;
  res.final_gap = cur_gap;
  res.potentials = extract_potentials(g, t, res.flow);
  return res;
}

}  // namespace lapflow
