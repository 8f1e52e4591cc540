#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indlap/matrix.hpp"

namespace indlap {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Deduplicates edges; throws InputError on out-of-range endpoints or self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Non-negative vertex weights.
class WeightFunction {
 public:
  WeightFunction() = default;
  /// Throws InputError on a negative or non-finite entry.
  explicit WeightFunction(std::vector<double> values);
  static WeightFunction constant(int n, double value);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Vertex v) const { return values_.at(v); }
  std::span<const double> values() const noexcept { return values_; }
  double total() const noexcept;
  bool strictly_positive() const noexcept;
  bool all_zero() const noexcept;
  /// Zero entries replaced by eps, positive entries kept.
  WeightFunction perturbed(double eps) const;

 private:
  std::vector<double> values_;
};

namespace gen {
Graph matching(int r);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
/// G(n, p): each pair u < v, visited in lexicographic order, is an edge iff the next
/// draw u = (x >> 11) * 2^-53 of a std::mt19937_64 seeded with `seed` satisfies u < p.
Graph random(int n, double p, std::uint64_t seed);
}  // namespace gen

struct GraphSpec {
  enum class Kind { matching, cycle, complete, empty, random };
  Kind kind = Kind::empty;
  int size = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Dispatches to the matching generator in `gen`.
Graph generate(const GraphSpec& spec);

/// Uniform draw in [0, 1) from the top 53 bits of a 64-bit word.
inline double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Graph complement(const Graph& g);

/// Vertex-weighted Laplacian: (u,u) = sum of neighbor weights, (u,v) = -w(v) on edges.
Matrix weighted_laplacian(const Graph& g, const WeightFunction& w);

/// Symmetric form: same diagonal, (u,v) = -sqrt(w(u) w(v)) on edges.
SymMatrix sym_weighted_laplacian(const Graph& g, const WeightFunction& w);

SymMatrix adjacency_matrix(const Graph& g);

/// Graph file: "n m" then m lines "u v"; '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, const std::string& comment = {});

/// Weight file: lines "v w_v"; vertices not listed default to 1.0.
WeightFunction read_weights(std::istream& in, int n);
void write_weights(std::ostream& out, const WeightFunction& w);

}  // namespace indlap
