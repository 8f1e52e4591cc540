#include "indlap/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "indlap/compound.hpp"
#include "indlap/errors.hpp"
#include "indlap/laplacian.hpp"

namespace indlap {

BoundReport make_bound_report(std::string theorem, BoundSense sense, std::vector<double> actuals,
                              std::vector<double> bounds, double scale) {
  if (actuals.size() != bounds.size())
    throw InputError("make_bound_report: actuals and bounds differ in length");
  BoundReport r;
  r.theorem = std::move(theorem);
  r.scale = scale;
  r.tolerance = bound_tolerance(scale);
  r.slacks.resize(actuals.size());
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    r.slacks[i] = sense == BoundSense::lower ? actuals[i] - bounds[i] : bounds[i] - actuals[i];
    if (r.worst_index == 0 || r.slacks[i] < r.slack) {
      r.slack = r.slacks[i];
      r.worst_index = i + 1;
    }
  }
  r.actuals = std::move(actuals);
  r.bounds = std::move(bounds);
  r.holds = r.slack >= -r.tolerance;
  return r;
}

namespace {

void check_k(int k, const char* what) {
  if (k < 0) throw InputError(std::string(what) + ": k must be >= 0");
}

void check_weights(const Graph& g, const WeightFunction& w, const char* what) {
  if (w.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError(std::string(what) + ": weight length does not match the vertex count");
}

std::vector<double> check_function(const Graph& g, std::span<const double> f, const char* what) {
  if (f.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError(std::string(what) + ": function length does not match the vertex count");
  for (double v : f)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw InputError(std::string(what) + ": entries must be finite and >= 0");
  return {f.begin(), f.end()};
}

std::vector<double> head(std::span<const double> values, std::size_t count) {
  return {values.begin(), values.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace

BoundReport independence_bounds_from_spectra(const Spectrum& actual,
                                             const Spectrum& graph_laplacian, double total_weight,
                                             int k) {
  check_k(k, "independence_bounds_from_spectra");
  const std::size_t fk = actual.size();
  std::vector<double> bounds;
  if (fk > 0) {
    const KSumSpectrum sums = k_sum_spectrum(graph_laplacian, k + 1);
    if (sums.size() < fk) throw InputError("independence_bounds_from_spectra: too many faces");
    for (std::size_t i = 1; i <= fk; ++i) bounds.push_back(total_weight - sums.largest(i));
  }
  const double scale = (k + 1) * std::max({actual.scale(), graph_laplacian.scale(), total_weight});
  BoundReport r = make_bound_report("independence_laplacian_lower_bound", BoundSense::lower,
                                    head(actual.values(), fk), std::move(bounds), scale);
  r.parameters = {{"k", k},
                  {"n", static_cast<double>(graph_laplacian.size())},
                  {"total_weight", total_weight},
                  {"face_count", static_cast<double>(fk)}};
  return r;
}

BoundReport main_independence_bounds(const Graph& g, const WeightFunction& w, int k) {
  check_k(k, "main_independence_bounds");
  check_weights(g, w, "main_independence_bounds");
  const SimplicialComplex x = independence_complex(g, k + 1);
  const Spectrum graph_spec = sym_eigenvalues(sym_weighted_laplacian(g, w));
  if (x.face_count(k) == 0)
    return independence_bounds_from_spectra(Spectrum({}, 0.0), graph_spec, w.total(), k);
  const Spectrum actual = sym_eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k));
  return independence_bounds_from_spectra(actual, graph_spec, w.total(), k);
}

BoundReport main_clique_bounds(const Graph& g, const WeightFunction& w, int k) {
  check_k(k, "main_clique_bounds");
  check_weights(g, w, "main_clique_bounds");
  const SimplicialComplex x = clique_complex(g, k + 1);
  const std::size_t fk = x.face_count(k);
  const double total = w.total();
  std::vector<double> bounds;
  Spectrum actual;
  double scale = total;
  if (fk > 0) {
    const Spectrum zero_lap = sym_eigenvalues(sym_vertex_weighted_k_laplacian(x, w, 0));
    const KSumSpectrum sums = k_sum_spectrum(zero_lap, k + 1);
    for (std::size_t i = 1; i <= fk; ++i) bounds.push_back(sums.smallest(i) - k * total);
    actual = sym_eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k));
    scale = std::max({scale, actual.scale(), zero_lap.scale()});
  }
  BoundReport r = make_bound_report("clique_laplacian_lower_bound", BoundSense::lower,
                                    head(actual.values(), fk), std::move(bounds),
                                    (k + 1) * scale);
  r.parameters = {{"k", k},
                  {"n", g.vertex_count()},
                  {"total_weight", total},
                  {"face_count", static_cast<double>(fk)}};
  return r;
}

std::uint64_t count_subset_sums_at_least(std::span<const double> values, int m, double threshold) {
  const int n = static_cast<int>(values.size());
  if (m < 0) throw InputError("count_subset_sums_at_least: m must be >= 0");
  if (m > n) return 0;
  if (m == 0) return threshold <= 0.0 ? 1 : 0;
  check_subset_enumeration(n, m, "count_subset_sums_at_least");
  std::uint64_t count = 0;
  std::vector<int> c(m);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    double s = 0.0;
    for (int idx : c) s += values[idx];
    if (s >= threshold) ++count;
    int i = m - 1;
    while (i >= 0 && c[i] == n - m + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
  }
  return count;
}

std::uint64_t betti_upper_bound(const Graph& g, const WeightFunction& w, int k) {
  check_k(k, "betti_upper_bound");
  check_weights(g, w, "betti_upper_bound");
  if (k + 1 > g.vertex_count()) return 0;
  const Spectrum spec = sym_eigenvalues(sym_weighted_laplacian(g, w));
  const double total = w.total();
  const double tol = count_tolerance(std::max(spec.scale(), total));
  return count_subset_sums_at_least(spec.values(), k + 1, total - tol);
}

ConnectivityBound connectivity_lower_bound(const Graph& g, const WeightFunction& w) {
  check_weights(g, w, "connectivity_lower_bound");
  if (w.all_zero()) throw InputError("connectivity_lower_bound: w is identically zero");
  const Spectrum spec = sym_eigenvalues(sym_weighted_laplacian(g, w));
  const double total = w.total();
  const double threshold = total - count_tolerance(std::max(spec.scale(), total));
  double running = 0.0;
  for (std::size_t m = 1; m <= spec.size(); ++m) {
    running += spec.largest(m);
    if (running >= threshold) return {static_cast<int>(m), false};
  }
  return {g.vertex_count() + 1, true};
}

InequalityCheck verify_quadratic_packing(const Graph& g, std::span<const double> f_in) {
  const auto f = check_function(g, f_in, "verify_quadratic_packing");
  InequalityCheck out;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double lhs = 0.0;
    for (Vertex u : g.neighbors(v)) lhs += f[u] * (f[u] + f[v]);
    if (1.0 - lhs < out.min_slack) {
      out.min_slack = 1.0 - lhs;
      out.worst_vertex = v;
    }
    out.value += f[v] * f[v];
  }
  out.valid = out.min_slack >= -1e-9;
  return out;
}

std::vector<double> cycle_packing_function(int n) {
  if (n < 3) throw InputError("cycle_packing_function: n must be >= 3");
  std::vector<double> f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f[i] = (i % 3 == 0) ? 0.0 : 1.0 / std::sqrt(2.0);
  return f;
}

QuadraticPackingBound quadratic_packing_eta_bound(const Graph& g, std::span<const double> f) {
  const InequalityCheck check = verify_quadratic_packing(g, f);
  if (!check.valid) {
    std::ostringstream msg;
    msg << "quadratic_packing_eta_bound: not a fractional quadratic packing (vertex "
        << check.worst_vertex << ", slack " << check.min_slack << ")";
    throw InputError(msg.str());
  }
  std::vector<double> squares(f.begin(), f.end());
  for (double& v : squares) v *= v;
  QuadraticPackingBound out;
  out.value = check.value;
  out.eta_bound = static_cast<int>(std::ceil(check.value - 1e-9));
  out.gershgorin = gershgorin_bound(sym_weighted_laplacian(g, WeightFunction(squares)).matrix());
  if (out.gershgorin > 1.0 + 1e-9)
    throw NumericError("quadratic_packing_eta_bound: Gershgorin bound exceeds 1");
  return out;
}

InequalityCheck verify_star_dominating_dual(const Graph& g, std::span<const double> f_in) {
  const auto f = check_function(g, f_in, "verify_star_dominating_dual");
  InequalityCheck out;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double lhs = g.degree(v) * f[v];
    for (Vertex u : g.neighbors(v)) lhs += f[u];
    if (1.0 - lhs < out.min_slack) {
      out.min_slack = 1.0 - lhs;
      out.worst_vertex = v;
    }
    out.value += f[v];
  }
  out.valid = out.min_slack >= -1e-9;
  return out;
}

namespace {

void check_representation_shape(const Graph& g, const VectorRepresentation& p) {
  if (p.vectors.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError("vector representation: need one vector per vertex");
  for (const auto& v : p.vectors)
    if (v.size() != static_cast<std::size_t>(p.dim))
      throw InputError("vector representation: vector length differs from the ambient dimension");
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

bool verify_vector_representation(const Graph& g, const VectorRepresentation& p) {
  check_representation_shape(g, p);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      const double need = g.has_edge(u, v) ? 1.0 : 0.0;
      if (dot(p.vectors[u], p.vectors[v]) < need - 1e-9) return false;
    }
  }
  return true;
}

std::uint64_t vector_rep_betti_bound(const Graph& g, const VectorRepresentation& p,
                                     std::span<const double> f_in, int k) {
  check_k(k, "vector_rep_betti_bound");
  if (!verify_vector_representation(g, p))
    throw InputError("vector_rep_betti_bound: not a vector representation of the graph");
  const auto f = check_function(g, f_in, "vector_rep_betti_bound");
  const double total = std::accumulate(f.begin(), f.end(), 0.0);
  if (!(total > 0.0)) throw InputError("vector_rep_betti_bound: f must have a positive sum");
  std::vector<double> s(static_cast<std::size_t>(p.dim), 0.0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int c = 0; c < p.dim; ++c) s[c] += f[v] * p.vectors[v][c];
  std::vector<double> scores;
  double scale = total;
  for (const auto& pv : p.vectors) {
    scores.push_back(dot(pv, s));
    scale = std::max(scale, std::abs(scores.back()));
  }
  return count_subset_sums_at_least(scores, k + 1, total - count_tolerance(scale));
}

bool verify_neighborhood_packing(const Graph& g, std::span<const Vertex> s) {
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) {
    if (v < 0 || v >= g.vertex_count())
      throw InputError("verify_neighborhood_packing: vertex out of range");
    auto claim = [&](Vertex x) {
      if (owner[x] != -1 && owner[x] != v) return false;
      owner[x] = v;
      return true;
    };
    if (!claim(v)) return false;
    for (Vertex u : g.neighbors(v))
      if (!claim(u)) return false;
  }
  return true;
}

namespace {

struct PackingSearch {
  std::vector<std::uint32_t> conflicts;  // vertices within distance 2, as bitmasks
  std::uint32_t best_set = 0;
  int best_size = 0;

  void run(std::uint32_t candidates, std::uint32_t chosen, int size) {
    if (size + std::popcount(candidates) <= best_size) return;
    if (candidates == 0) {
      best_size = size;
      best_set = chosen;
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = 1u << v;
    run(candidates & ~bit & ~conflicts[v], chosen | bit, size + 1);
    run(candidates & ~bit, chosen, size);
  }
};

}  // namespace

PackingResult max_neighborhood_packing(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxPackingSearchVertices) {
    std::ostringstream msg;
    msg << "max_neighborhood_packing: " << n << " vertices exceeds the search cap of "
        << kMaxPackingSearchVertices;
    throw ResourceError(msg.str());
  }
  PackingSearch search;
  search.conflicts.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      search.conflicts[v] |= 1u << u;
      for (Vertex x : g.neighbors(u))
        if (x != v) search.conflicts[v] |= 1u << x;
    }
  }
  search.run((1u << n) - 1u, 0, 0);
  PackingResult out;
  out.size = static_cast<std::size_t>(search.best_size);
  for (Vertex v = 0; v < n; ++v)
    if (search.best_set & (1u << v)) out.witness.push_back(v);
  return out;
}

std::uint64_t packing_betti_bound(const Graph& g, std::span<const Vertex> s, int k) {
  check_k(k, "packing_betti_bound");
  if (!verify_neighborhood_packing(g, s))
    throw InputError("packing_betti_bound: set is not a neighborhood packing");
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int deg_s = 0;
  for (Vertex v : members) deg_s += g.degree(v);
  const int size = static_cast<int>(members.size());
  const int n = g.vertex_count();
  std::uint64_t total = 0;
  for (int m = size; m <= k + 1; ++m) total += binomial(deg_s, m) * binomial(n - deg_s, k + 1 - m);
  return total;
}

namespace {

// Calls visit(members) for every k-subset of {0..n-1}, with the enumeration cap enforced.
template <typename Visit>
void for_each_subset(int n, int k, const char* what, Visit&& visit) {
  check_subset_enumeration(n, k, what);
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    visit(std::span<const int>(c));
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

double merris_ksum_bound(const SymMatrix& m, int k) {
  const int n = static_cast<int>(m.size());
  if (k < 1 || k > n) throw InputError("merris_ksum_bound: need 1 <= k <= n");
  std::vector<bool> inside(static_cast<std::size_t>(n));
  double best = -std::numeric_limits<double>::infinity();
  for_each_subset(n, k, "merris_ksum_bound", [&](std::span<const int> sigma) {
    std::fill(inside.begin(), inside.end(), false);
    for (int i : sigma) inside[i] = true;
    double value = 0.0;
    for (int i : sigma) {
      value += m(i, i);
      for (int j = 0; j < n; ++j)
        if (!inside[j]) value += std::abs(m(i, j));
    }
    best = std::max(best, value);
  });
  return best;
}

MerrisGraphBounds graph_merris_bounds(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw InputError("graph_merris_bounds: need 1 <= k <= n");
  const auto edges = g.edges();
  std::vector<bool> inside(static_cast<std::size_t>(n));
  std::size_t touching_best = 0;
  std::size_t boundary_best = 0;
  for_each_subset(n, k, "graph_merris_bounds", [&](std::span<const int> sigma) {
    std::fill(inside.begin(), inside.end(), false);
    for (int i : sigma) inside[i] = true;
    std::size_t touching = 0;
    std::size_t boundary = 0;
    for (auto [u, v] : edges) {
      const int hits = int(inside[u]) + int(inside[v]);
      if (hits > 0) ++touching;
      if (hits == 1) ++boundary;
    }
    touching_best = std::max(touching_best, touching);
    boundary_best = std::max(boundary_best, boundary);
  });
  return {2.0 * static_cast<double>(touching_best), static_cast<double>(boundary_best)};
}

double degree_sum_excess(const Graph& g, const WeightFunction& w, int k) {
  check_k(k, "degree_sum_excess");
  check_weights(g, w, "degree_sum_excess");
  const SimplicialComplex x = clique_complex(g, k + 1);
  const auto faces = x.faces(k);
  if (faces.empty()) return -std::numeric_limits<double>::infinity();
  const auto nbrs = all_simplex_neighbors(x, k);
  std::vector<double> weighted_degree(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v)) weighted_degree[v] += w[u];
  const double total = w.total();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < faces.size(); ++a) {
    double lhs = 0.0;
    for (Vertex v : faces[a]) lhs += weighted_degree[v];
    for (Vertex v : nbrs[a]) lhs -= w[v];
    worst = std::max(worst, lhs - k * total);
  }
  return worst;
}

}  // namespace indlap
