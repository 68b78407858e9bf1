#include "lapflow/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace lapflow::io {

namespace {

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Yields meaningful lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& name) {
  auto lines = content_lines(in);
  if (lines.empty()) parse_fail(name, 1, "missing header line \"n m\"");
  long n = 0, m = 0;
  {
    std::istringstream ss(lines[0].second);
    if (!(ss >> n >> m) || n < 1 || m < 0) {
      parse_fail(name, lines[0].first, "bad header \"" + lines[0].second + "\"");
    }
  }
  if (static_cast<long>(lines.size()) != m + 1) {
    parse_fail(name, lines.back().first,
               "expected " + std::to_string(m) + " edge lines, got " +
                   std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i) {
    std::istringstream ss(lines[static_cast<std::size_t>(i)].second);
    long a = 0, b = 0;
    if (!(ss >> a >> b)) {
      parse_fail(name, lines[static_cast<std::size_t>(i)].first,
                 "bad edge line \"" + lines[static_cast<std::size_t>(i)].second + "\"");
    }
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  return build_graph(static_cast<VertexId>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  return read_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path + ": cannot open for writing");
  write_graph(out, g);
}

std::vector<double> read_vector(std::istream& in, const std::string& name) {
  auto lines = content_lines(in);
  std::vector<double> out;
  out.reserve(lines.size());
  for (const auto& [no, line] : lines) {
    std::istringstream ss(line);
    double v = 0.0;
    if (!(ss >> v)) parse_fail(name, no, "bad value \"" + line + "\"");
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  return read_vector(in, path);
}

void write_vector(std::ostream& out, const std::vector<double>& v) {
  for (double x : v) out << fmt_real(x) << '\n';
}

void write_vector_file(const std::string& path, const std::vector<double>& v) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path + ": cannot open for writing");
  write_vector(out, v);
}

Graph gen_path(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "path needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return build_graph(n, edges);
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1 || static_cast<long>(rows) * cols < 2) {
    throw Error(ErrorKind::InvalidParams, "grid needs at least 2 vertices");
  }
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return build_graph(rows * cols, edges);
}

Graph gen_torus(int k) {
  // Wraparound would create a 2-cycle for k = 2.
  if (k < 3) throw Error(ErrorKind::InvalidParams, "torus needs k >= 3");
  std::vector<Edge> edges;
  auto id = [k](int r, int c) { return r * k + c; };
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      edges.push_back({id(r, c), id(r, (c + 1) % k)});
      edges.push_back({id(r, c), id((r + 1) % k, c)});
    }
  }
  return build_graph(k * k, edges);
}

Graph gen_random(int n, int m, std::uint64_t seed) {
  if (n < 2 || m < n - 1 || static_cast<long>(m) > static_cast<long>(n) * (n - 1) / 2) {
    throw Error(ErrorKind::InvalidParams, "random graph needs n >= 2 and n-1 <= m <= n(n-1)/2");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

  // Random spanning tree by attaching each vertex (in shuffled order) to a
  // random earlier one, then extra edges rejecting loops/2-cycles/parallels.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)],
                                            order[static_cast<std::size_t>(draw(i + 1))]);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  for (int i = 1; i < n; ++i) {
    int a = order[static_cast<std::size_t>(draw(i))];
    int b = order[static_cast<std::size_t>(i)];
    if (rng() & 1) std::swap(a, b);
    edges.push_back({a, b});
    used.insert(std::minmax(a, b));
  }
  while (static_cast<int>(edges.size()) < m) {
    int a = draw(n);
    int b = draw(n);
    if (a == b) continue;
    auto key = std::minmax(a, b);
    if (!used.insert(key).second) continue;
    edges.push_back({a, b});
  }
  return build_graph(n, edges);
}

void write_summary(std::ostream& out, const RunSummary& s) {
  out << "n=" << s.n << '\n'
      << "m=" << s.m << '\n'
      << "p=" << s.p << '\n'
      << "tau=" << fmt_real(s.tau) << '\n'
      << "tree_strategy=" << s.tree_strategy << '\n'
      << "mode=" << s.mode << '\n'
      << "seed=" << s.seed << '\n'
      << "iterations=" << s.iterations << '\n'
      << "final_energy=" << fmt_real(s.final_energy) << '\n'
      << "final_gap=" << fmt_real(s.final_gap) << '\n'
      << "termination=" << s.termination << '\n'
      << "wall_time_ms=" << fmt_real(s.wall_time_ms) << '\n'
      << "residual_inf=" << fmt_real(s.residual_inf) << '\n';
}

void write_trace(std::ostream& out, const std::vector<TracePoint>& trace) {
  out << "iter,energy,gap\n";
  for (const TracePoint& p : trace) {
    out << p.iteration << ',' << fmt_real(p.energy) << ',' << fmt_real(p.gap) << '\n';
  }
}

const char* to_string(TreeStrategy s) {
  switch (s) {
    case TreeStrategy::Bfs: return "bfs";
    case TreeStrategy::Dfs: return "dfs";
    case TreeStrategy::LowStretchHeuristic: return "low_stretch_heuristic";
  }
  return "?";
}

const char* to_string(SolveMode m) {
  return m == SolveMode::Random ? "random" : "sweep";
}

const char* to_string(Termination t) {
  return t == Termination::Converged ? "converged" : "max_iters";
}

TreeStrategy parse_tree_strategy(const std::string& s) {
  if (s == "bfs") return TreeStrategy::Bfs;
  if (s == "dfs") return TreeStrategy::Dfs;
  if (s == "low_stretch_heuristic" || s == "low-stretch") return TreeStrategy::LowStretchHeuristic;
  throw Error(ErrorKind::InvalidParams, "unknown tree strategy \"" + s + "\"");
}

SolveMode parse_mode(const std::string& s) {
  if (s == "random") return SolveMode::Random;
  if (s == "sweep") return SolveMode::Sweep;
  throw Error(ErrorKind::InvalidParams, "unknown mode \"" + s + "\"");
}

}  // namespace lapflow::io
