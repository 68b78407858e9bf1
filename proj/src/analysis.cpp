#include "lapflow/analysis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace lapflow {

VertexFunction direct_solve_oracle(const Graph& g, const VertexFunction& f) {
  VertexId n = g.num_vertices();
  if (n > kOracleVertexCap) {
    throw Error(ErrorKind::TooLarge, "dense oracle capped at n = " +
                                         std::to_string(kOracleVertexCap));
  }
  if (f.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::DomainMismatch, "rhs length " + std::to_string(f.size()));
  }
  if (!check_compatibility(f)) {
    throw Error(ErrorKind::IncompatibleRHS, "(1, f) != 0");
  }

  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    lap(ed.tail, ed.tail) += 1.0;
    lap(ed.head, ed.head) += 1.0;
    lap(ed.tail, ed.head) -= 1.0;
    lap(ed.head, ed.tail) -= 1.0;
  }
  Eigen::VectorXd rhs(n);
  for (VertexId v = 0; v < n; ++v) rhs(v) = f[static_cast<std::size_t>(v)];

  // The Laplacian rows sum to zero; with (1, f) = 0 the last equation is
  // implied, so it can be swapped for the mean-zero constraint.
  lap.row(n - 1).setOnes();
  rhs(n - 1) = 0.0;

  Eigen::VectorXd u = lap.partialPivLu().solve(rhs);
  VertexFunction out(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = u(v);
  return out;
}

EdgeFunction optimal_flow_oracle(const Graph& g, const VertexFunction& f) {
  return gradient(g, direct_solve_oracle(g, f));
}

IncidenceMatrix incidence_matrix(const std::vector<Cycle>& basis, EdgeId m) {
  IncidenceMatrix out;
  out.rows = basis.size();
  out.cols = static_cast<std::size_t>(m);
  out.data.assign(out.rows * out.cols, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const Cycle::Entry& en : basis[i].entries) {
      if (en.edge < 0 || en.edge >= m) {
        throw Error(ErrorKind::EdgeOutOfRange, "cycle edge " + std::to_string(en.edge));
      }
      out.at(i, static_cast<std::size_t>(en.edge)) = static_cast<double>(en.sign);
    }
  }
  return out;
}

namespace {

Eigen::MatrixXd to_eigen(const IncidenceMatrix& m) {
  Eigen::MatrixXd out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.at(i, j);
  }
  return out;
}

GramPsdResult min_eig_gram_minus_identity(const Eigen::MatrixXd& cols) {
  Eigen::MatrixXd gram = cols.transpose() * cols;
  gram.diagonal().array() -= 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();
  return {min_eig >= -1e-9, min_eig};
}

}  // namespace

GramPsdResult check_gram_psd(const IncidenceMatrix& m) {
  if (m.rows < 1) throw Error(ErrorKind::InvalidParams, "empty cycle set");
  if (m.cols > kGramEdgeCap) {
    throw Error(ErrorKind::TooLarge, "dense eigensolve capped at m = " +
                                         std::to_string(kGramEdgeCap));
  }
  return min_eig_gram_minus_identity(to_eigen(m));
}

GramPsdResult check_gram_psd_restricted(const IncidenceMatrix& m,
                                        const std::vector<EdgeId>& non_tree_edges) {
  if (m.rows < 1) throw Error(ErrorKind::InvalidParams, "empty cycle set");
  if (m.cols > kGramEdgeCap) {
    throw Error(ErrorKind::TooLarge, "dense eigensolve capped at m = " +
                                         std::to_string(kGramEdgeCap));
  }
  Eigen::MatrixXd sub(m.rows, non_tree_edges.size());
  for (std::size_t j = 0; j < non_tree_edges.size(); ++j) {
    for (std::size_t i = 0; i < m.rows; ++i) {
      sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m.at(i, static_cast<std::size_t>(non_tree_edges[j]));
    }
  }
  return min_eig_gram_minus_identity(sub);
}

std::size_t matrix_rank(const IncidenceMatrix& m) {
  if (m.rows == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(m));
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

GapBoundReport verify_gap_bound(const Graph& g, const SpanningTree& t,
                                const std::vector<Cycle>& basis, std::size_t trials, Rng& rng) {
  std::size_t p = cycle_space_dimension(g);
  IncidenceMatrix m = incidence_matrix(basis, g.num_edges());
  if (basis.size() != p || matrix_rank(m) != p) {
    throw Error(ErrorKind::NotABasis, "cycle set does not span the cycle space");
  }

  GapBoundReport report;
  report.trials = trials;
  report.gram_psd = check_gram_psd(m).psd;
  report.gram_psd_restricted = check_gram_psd_restricted(m, t.non_tree_edges).psd;

  TreeBasis tb = tree_basis(g, t);

  // Random mean-zero rhs fixed across trials.
  VertexFunction f(static_cast<std::size_t>(g.num_vertices()));
  for (double& v : f.values) v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  double mean = 0.0;
  for (double v : f.values) mean += v;
  mean /= static_cast<double>(f.size());
  for (double& v : f.values) v -= mean;
  EdgeFunction base = feasible_flow(g, t, f);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    EdgeFunction a = base;
    for (const Cycle& c : basis) {
      double coeff = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 4.0 - 2.0;
      for (const Cycle::Entry& en : c.entries) {
        a[static_cast<std::size_t>(en.edge)] += coeff * static_cast<double>(en.sign);
      }
    }

    double g_tree = gap(g, t, tb, a, f);
    double g_def = gap_slow(g, t, a, f);
    double scale = std::max({1.0, std::abs(g_tree), std::abs(g_def)});
    report.worst_tree_identity_error =
        std::max(report.worst_tree_identity_error, std::abs(g_tree - g_def) / scale);
    if (std::abs(g_tree - g_def) > 1e-9 * scale) {
      report.violations.push_back("trial " + std::to_string(trial) +
                                  ": tree gap identity off by " +
                                  std::to_string(std::abs(g_tree - g_def)));
    }

    double bound = 0.0;
    for (const Cycle& c : basis) {
      double v = curl_component(a, c);
      bound += v * v;
    }
    if ((report.gram_psd || report.gram_psd_restricted) &&
        g_tree > bound + 1e-9 * std::max(1.0, bound)) {
      report.violations.push_back("trial " + std::to_string(trial) + ": gap " +
                                  std::to_string(g_tree) + " exceeds cycle bound " +
                                  std::to_string(bound));
    }
  }
  return report;
}

std::size_t cycle_space_dimension(const Graph& g) {
  return static_cast<std::size_t>(g.num_edges() - g.num_vertices() + 1);
}

}  // namespace lapflow
