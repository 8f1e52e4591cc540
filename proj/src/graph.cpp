#include "indlap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "indlap/errors.hpp"

namespace indlap {

Graph::Graph(int n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge {" << u << "," << v << "} has a vertex outside 0.." << n - 1;
      throw InputError(msg.str());
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adj_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

WeightFunction::WeightFunction(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      std::ostringstream msg;
      msg << "weight of vertex " << i << " is " << values_[i] << "; weights must be >= 0";
      throw InputError(msg.str());
    }
  }
}

WeightFunction WeightFunction::constant(int n, double value) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  return WeightFunction(std::vector<double>(static_cast<std::size_t>(n), value));
}

double WeightFunction::total() const noexcept {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

bool WeightFunction::strictly_positive() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v > 0.0; });
}

bool WeightFunction::all_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

WeightFunction WeightFunction::perturbed(double eps) const {
  if (!(eps > 0.0)) throw InputError("perturbation must be positive");
  std::vector<double> out = values_;
  for (double& v : out)
    if (v == 0.0) v = eps;
  return WeightFunction(std::move(out));
}

namespace gen {

Graph matching(int r) {
  if (r < 1) throw InputError("matching size must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edges(2 * r, edges);
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw InputError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph empty(int n) {
  if (n < 1) throw InputError("empty graph needs at least 1 vertex");
  return Graph(n);
}

Graph random(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs at least 1 vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit_interval(rng()) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace gen

Graph generate(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::matching: return gen::matching(spec.size);
    case GraphSpec::Kind::cycle: return gen::cycle(spec.size);
    case GraphSpec::Kind::complete: return gen::complete(spec.size);
    case GraphSpec::Kind::empty: return gen::empty(spec.size);
    case GraphSpec::Kind::random: return gen::random(spec.size, spec.p, spec.seed);
  }
  throw InputError("unknown graph kind");
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

namespace {

void check_weight_length(const Graph& g, const WeightFunction& w) {
  if (w.size() != static_cast<std::size_t>(g.vertex_count())) {
    std::ostringstream msg;
    msg << "weight function has " << w.size() << " entries for a graph on " << g.vertex_count()
        << " vertices";
    throw InputError(msg.str());
  }
}

double neighbor_weight_sum(const Graph& g, const WeightFunction& w, Vertex u) {
  double s = 0.0;
  for (Vertex v : g.neighbors(u)) s += w[v];
  return s;
}

}  // namespace

Matrix weighted_laplacian(const Graph& g, const WeightFunction& w) {
  check_weight_length(g, w);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  check_dense_dims(n, n, "weighted_laplacian");
  Matrix m(n, n);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    m(u, u) = neighbor_weight_sum(g, w, u);
    for (Vertex v : g.neighbors(u)) m(u, v) = -w[v];
  }
  return m;
}

SymMatrix sym_weighted_laplacian(const Graph& g, const WeightFunction& w) {
  check_weight_length(g, w);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  check_dense_dims(n, n, "sym_weighted_laplacian");
  Matrix m(n, n);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    m(u, u) = neighbor_weight_sum(g, w, u);
    for (Vertex v : g.neighbors(u)) m(u, v) = -std::sqrt(w[u] * w[v]);
  }
  return SymMatrix(std::move(m));
}

SymMatrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  check_dense_dims(n, n, "adjacency_matrix");
  Matrix m(n, n);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u)) m(u, v) = 1.0;
  return SymMatrix(std::move(m));
}

namespace {

// Next line with comments stripped and at least one token; false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void parse_fail(const char* what, int line_no, const std::string& detail) {
  std::ostringstream msg;
  msg << what << " line " << line_no << ": " << detail;
  throw InputError(msg.str());
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw InputError("graph file: missing 'n m' header");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra)) parse_fail("graph file", line_no, "expected 'n m'");
    if (n < 0 || m < 0) parse_fail("graph file", line_no, "negative count");
    if (n > 1'000'000) parse_fail("graph file", line_no, "vertex count too large");
  }
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    if (!next_content_line(in, line, line_no))
      throw InputError("graph file: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(e));
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) parse_fail("graph file", line_no, "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) parse_fail("graph file", line_no, "vertex out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, line_no)) parse_fail("graph file", line_no, "unexpected data");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

WeightFunction read_weights(std::istream& in, int n) {
  std::vector<double> values(static_cast<std::size_t>(n), 1.0);
  std::vector<bool> seen(values.size(), false);
  std::string line;
  int line_no = 0;
  while (next_content_line(in, line, line_no)) {
    std::istringstream ls(line);
    long long v = 0;
    std::string weight_token;
    std::string extra;
    if (!(ls >> v >> weight_token) || (ls >> extra))
      parse_fail("weight file", line_no, "expected 'v w_v'");
    if (v < 0 || v >= n) parse_fail("weight file", line_no, "vertex out of range");
    if (seen[v]) parse_fail("weight file", line_no, "vertex listed twice");
    double weight = 0.0;
    try {
      std::size_t used = 0;
      weight = std::stod(weight_token, &used);
      if (used != weight_token.size()) parse_fail("weight file", line_no, "bad number");
    } catch (const std::logic_error&) {
      parse_fail("weight file", line_no, "bad number");
    }
    values[v] = weight;
    seen[v] = true;
  }
  return WeightFunction(std::move(values));
}

void write_weights(std::ostream& out, const WeightFunction& w) {
  char buf[40];
  for (std::size_t v = 0; v < w.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%.17g", w.values()[v]);
    out << v << ' ' << buf << '\n';
  }
}

}  // namespace indlap
