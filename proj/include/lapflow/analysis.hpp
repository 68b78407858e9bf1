#pragma once

#include <vector>

#include "lapflow/graph.hpp"
#include "lapflow/operators.hpp"
#include "lapflow/solver.hpp"
#include "lapflow/tree.hpp"

namespace lapflow {

// Dense cycles-by-edges matrix with entries in {-1, 0, +1}.
struct IncidenceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

inline constexpr VertexId kOracleVertexCap = 2000;
inline constexpr std::size_t kGramEdgeCap = 200;

// Ground truth for the potentials: dense elimination on the Laplacian with
// the mean-zero constraint replacing one row. Independent of the iterative
// solver's code path.
VertexFunction direct_solve_oracle(const Graph& g, const VertexFunction& f);

// gradient(direct_solve_oracle(f)) — the unique minimum-energy flow.
EdgeFunction optimal_flow_oracle(const Graph& g, const VertexFunction& f);

IncidenceMatrix incidence_matrix(const std::vector<Cycle>& basis, EdgeId m);

struct GramPsdResult {
  bool psd;
  double min_eigenvalue;
};

// Smallest eigenvalue of M^T M - I over the full edge space.
GramPsdResult check_gram_psd(const IncidenceMatrix& m);

// Same test restricted to the non-tree columns; this is the hypothesis the
// off-tree gap bound actually uses, since A - grad u vanishes on the tree.
GramPsdResult check_gram_psd_restricted(const IncidenceMatrix& m,
                                        const std::vector<EdgeId>& non_tree_edges);

std::size_t matrix_rank(const IncidenceMatrix& m);

struct GapBoundReport {
  std::size_t trials = 0;
  bool gram_psd = false;
  bool gram_psd_restricted = false;
  std::vector<std::string> violations;
  double worst_tree_identity_error = 0.0;
};

// For random feasible flows A = A_f + random cycle combination: checks the
// tree-basis gap equality always, and gap(A) <= sum (A, D_i)^2 whenever the
// (restricted) Gram test passes.
GapBoundReport verify_gap_bound(const Graph& g, const SpanningTree& t,
                                const std::vector<Cycle>& basis, std::size_t trials, Rng& rng);

std::size_t cycle_space_dimension(const Graph& g);

}  // namespace lapflow
