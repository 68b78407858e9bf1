#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lapflow/graph.hpp"
#include "lapflow/operators.hpp"
#include "lapflow/tree.hpp"

namespace lapflow {

enum class SolveMode { Random, Sweep };

struct SolverConfig {
  double tol = 1e-8;            // relative gap tolerance
  std::int64_t max_iters = 1'000'000;
  std::uint64_t seed = 0;
  std::int64_t gap_check_every = 0;  // 0 = every m updates
  SolveMode mode = SolveMode::Random;
  TreeStrategy tree_strategy = TreeStrategy::Bfs;
  VertexId root = 0;
};

struct TracePoint {
  std::int64_t iteration;
  double energy;
  double gap;
};

enum class Termination { Converged, MaxIters };

struct SolveResult {
  EdgeFunction flow;
  VertexFunction potentials;  // mean-zero
  std::int64_t iterations = 0;
  Termination termination = Termination::Converged;
  std::vector<TracePoint> trace;
  double tau = 0.0;
  std::uint64_t seed = 0;
  std::string rng_algorithm = "mt19937_64";
  double final_energy = 0.0;
  double final_gap = 0.0;
};

struct CycleUpdate {
  double alpha;
  double delta_energy;
};

// A <- A + alpha C with alpha = -(A,C)/|C|^2; returns alpha and the exact
// energy decrement -(A,C)^2/|C|^2. Only cycle-support entries change.
CycleUpdate cycle_update(EdgeFunction& a, const Cycle& c);

// Lemma 7 form: sum over non-tree edges of (A, C_e)^2.
double gap(const Graph& g, const SpanningTree& t, const TreeBasis& basis, const EdgeFunction& a,
           const VertexFunction& f);

// Definition form: |A|^2 - (2(u,f) - (grad u, grad u)) with the induced u.
double gap_slow(const Graph& g, const SpanningTree& t, const EdgeFunction& a,
                const VertexFunction& f);

// Lemma 6 form: |A - grad u|^2 restricted to non-tree edges.
double gap_offtree(const Graph& g, const SpanningTree& t, const EdgeFunction& a);

using Rng = std::mt19937_64;

// Draws index i with probability |C_i|^2 / tau. Uses an explicit 53-bit
// uniform so the draw sequence is identical across platforms.
std::size_t sample_cycle(const TreeBasis& basis, Rng& rng);

SolveResult solve(const Graph& g, const VertexFunction& f, const SolverConfig& cfg);

// Induced potential shifted to mean zero.
VertexFunction extract_potentials(const Graph& g, const SpanningTree& t, const EdgeFunction& a);

}  // namespace lapflow
