#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lapflow/graph.hpp"
#include "lapflow/solver.hpp"

namespace lapflow::io {

// Graph file: line "n m", then m lines "tail head". Blank lines and lines
// starting with '#' are ignored.
Graph read_graph(std::istream& in, const std::string& name = "<stream>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Vector file: one real per line.
std::vector<double> read_vector(std::istream& in, const std::string& name = "<stream>");
std::vector<double> read_vector_file(const std::string& path);
void write_vector(std::ostream& out, const std::vector<double>& v);
void write_vector_file(const std::string& path, const std::vector<double>& v);

// Generators. Deterministic for fixed parameters and seed.
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_grid(int rows, int cols);
Graph gen_torus(int k);  // k >= 3: n = k^2, m = 2k^2, right and down edges
Graph gen_random(int n, int m, std::uint64_t seed);

struct RunSummary {
  VertexId n = 0;
  EdgeId m = 0;
  std::size_t p = 0;
  double tau = 0.0;
  std::string tree_strategy;
  std::string mode;
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;
  double final_energy = 0.0;
  double final_gap = 0.0;
  std::string termination;
  double wall_time_ms = 0.0;
  double residual_inf = 0.0;
};

void write_summary(std::ostream& out, const RunSummary& s);
void write_trace(std::ostream& out, const std::vector<TracePoint>& trace);

const char* to_string(TreeStrategy s);
const char* to_string(SolveMode m);
const char* to_string(Termination t);
TreeStrategy parse_tree_strategy(const std::string& s);
SolveMode parse_mode(const std::string& s);

}  // namespace lapflow::io
