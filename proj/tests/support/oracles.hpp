// Independent reference computations and test corpora shared by the unit and acceptance tests.
// Nothing here calls into the library routines it is used to check.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indlap/graph.hpp"
#include "indlap/matrix.hpp"

namespace oracle {

using indlap::Edge;
using indlap::Graph;
using indlap::Matrix;
using indlap::WeightFunction;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * indlap::unit_interval(rng());
}

/// All graphs on n labeled vertices; bit b of the index selects the b-th pair in lex order.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) edges.push_back(pairs[b]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

/// The i-th seeded random graph of the shared corpus (n in 3..8).
inline Graph corpus_random_graph(int i) {
  static constexpr double kProbabilities[] = {0.3, 0.5, 0.7};
  return indlap::gen::random(3 + i % 6, kProbabilities[i % 3], 1000 + static_cast<std::uint64_t>(i));
}

/// Every labeled graph on 4 and 5 vertices followed by 200 seeded random graphs.
inline std::vector<Graph> graph_corpus() {
  std::vector<Graph> out = all_labeled_graphs(4);
  auto five = all_labeled_graphs(5);
  out.insert(out.end(), five.begin(), five.end());
  for (int i = 0; i < 200; ++i) out.push_back(corpus_random_graph(i));
  return out;
}

inline WeightFunction positive_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(n);
  for (double& x : w) x = uniform(rng, 0.5, 2.0);
  return WeightFunction(std::move(w));
}

/// Roughly a third of the entries are zero, the rest uniform in [0.5, 2].
inline WeightFunction weights_with_zeros(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(n);
  for (double& x : w) {
    const double coin = indlap::unit_interval(rng());
    const double value = uniform(rng, 0.5, 2.0);
    x = coin < 1.0 / 3.0 ? 0.0 : value;
  }
  return WeightFunction(std::move(w));
}

/// The three weight families used on every corpus graph.
inline std::vector<std::pair<std::string, WeightFunction>> weight_family(int n, std::uint64_t seed) {
  return {{"unit", WeightFunction::constant(n, 1.0)},
          {"positive", positive_weights(n, seed)},
          {"zeros", weights_with_zeros(n, seed ^ 0x9e3779b97f4a7c15ULL)}};
}

inline Matrix random_symmetric(int n, std::mt19937_64& rng, double range = 1.0) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, -range, range);
  return m;
}

/// Random orthogonal matrix by Gram-Schmidt on a random Gaussian matrix.
inline Matrix random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<std::vector<double>> q;
  while (static_cast<int>(q.size()) < n) {
    std::vector<double> v(n);
    for (double& x : v) x = gauss(rng);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : q) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += u[i] * v[i];
        for (int i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-8) continue;
    for (double& x : v) x /= norm;
    q.push_back(std::move(v));
  }
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = q[j][i];
  return out;
}

/// Q diag(lambda) Q^T.
inline Matrix planted(const std::vector<double>& lambda, const Matrix& q) {
  const std::size_t n = lambda.size();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < n; ++t) s += q(i, t) * lambda[t] * q(j, t);
      out(i, j) = s;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) out(i, j) = out(j, i);
  return out;
}

/// Eigenvalues of [[a, b], [c, d]] when real, ascending.
inline std::pair<double, double> eigen_2x2(double a, double b, double c, double d) {
  const double mean = 0.5 * (a + d);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  return {mean - disc, mean + disc};
}

/// All sums of k entries by bitmask enumeration, ascending.
inline std::vector<double> k_sums(const std::vector<double>& values, int k) {
  std::vector<double> out;
  const int n = static_cast<int>(values.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s += values[i];
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool independent(const Graph& g, std::uint32_t mask) {
  for (const auto& [u, v] : g.edges())
    if ((mask >> u & 1) && (mask >> v & 1)) return false;
  return true;
}

/// Number of independent sets of each size 1..n, by enumerating all vertex subsets.
inline std::vector<std::size_t> independent_set_counts(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::size_t> counts(n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    if (independent(g, mask)) ++counts[std::popcount(mask) - 1];
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

/// Sign of the permutation sorting `v`, or 0 if it has a repeated entry.
inline int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

/// The derivation M acting on the k-th exterior power, built by letting M hit one wedge factor
/// at a time and re-sorting: M(e_a ^ ... ^ e_c) = sum over factors of e_a ^ .. ^ Me_x ^ .. ^ e_c.
/// Rows and columns follow the lexicographic order of k-subsets.
inline Matrix wedge_derivation(const Matrix& m, int k) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<int>> basis;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    basis.push_back(std::move(s));
  }
  std::sort(basis.begin(), basis.end());
  auto position = [&](const std::vector<int>& s) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), s) - basis.begin());
  };
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (int slot = 0; slot < k; ++slot) {
      for (int j = 0; j < n; ++j) {
        const double coeff = m(j, basis[col][slot]);
        if (coeff == 0.0) continue;
        std::vector<int> image = basis[col];
        image[slot] = j;
        const int sign = sort_sign(image);
        if (sign == 0) continue;
        out(position(image), col) += sign * coeff;
      }
    }
  }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a, std::span<const double> b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace oracle
