#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "indlap/complex.hpp"
#include "indlap/graph.hpp"
#include "indlap/matrix.hpp"
#include "indlap/spectral.hpp"

namespace indlap {

/// Per-index comparison of computed values against a proven bound.
///
/// slacks[i] is actual - bound for lower bounds and bound - actual for upper bounds; `slack` is
/// their minimum (0 for an empty report). holds <=> slack >= -tolerance, where
/// tolerance = 1e-7 * (1 + scale).
struct BoundReport {
  std::string theorem;
  std::map<std::string, double> parameters;
  std::vector<double> bounds;
  std::vector<double> actuals;
  std::vector<double> slacks;
  double slack = 0.0;
  double scale = 0.0;
  double tolerance = 0.0;
  bool holds = true;
  /// 1-based index of the smallest slack; 0 for an empty report.
  std::size_t worst_index = 0;
};

enum class BoundSense { lower, upper };

BoundReport make_bound_report(std::string theorem, BoundSense sense, std::vector<double> actuals,
                              std::vector<double> bounds, double scale);

inline double bound_tolerance(double scale) noexcept { return 1e-7 * (1.0 + scale); }
inline double count_tolerance(double scale) noexcept { return 1e-9 * (1.0 + scale); }

/// lambda_i(L_k^w(I(G))) >= sum(w) - mu_{k+1,i}(L^w(G)) for i <= f_k(I(G)).
BoundReport main_independence_bounds(const Graph& g, const WeightFunction& w, int k);

/// Same comparison from precomputed spectra: `actual` of L_k^w(I(G)) and `graph_laplacian` of
/// L^w(G).
BoundReport independence_bounds_from_spectra(const Spectrum& actual,
                                             const Spectrum& graph_laplacian, double total_weight,
                                             int k);

/// lambda_i(L_k^w(X(G))) >= nu_{k+1,i}(L_0^w(X(G))) - k sum(w) for i <= f_k(X(G)).
BoundReport main_clique_bounds(const Graph& g, const WeightFunction& w, int k);

/// Number of (k+1)-subsets I with sum_{i in I} lambda_i^down(L^w(G)) >= sum(w), an upper bound
/// on dim H_k(I(G)). Ties within count_tolerance are counted.
std::uint64_t betti_upper_bound(const Graph& g, const WeightFunction& w, int k);

struct ConnectivityBound {
  /// Smallest m with the sum of the m largest eigenvalues of L^w(G) >= sum(w); n + 1 if none.
  int value = 0;
  /// True when no m <= n qualifies.
  bool vacuous = false;
};

/// Throws InputError when w is identically zero.
ConnectivityBound connectivity_lower_bound(const Graph& g, const WeightFunction& w);

struct InequalityCheck {
  bool valid = false;
  /// Minimum over vertices of (1 - lhs); infinite for an empty graph.
  double min_slack = 0.0;
  Vertex worst_vertex = -1;
  /// Sum f(v)^2 for quadratic packings, sum f(v) for star-dominating duals.
  double value = 0.0;
};

/// sum_{u in N(v)} f(u) (f(u) + f(v)) <= 1 at every vertex, within 1e-9.
InequalityCheck verify_quadratic_packing(const Graph& g, std::span<const double> f);

/// f(i) = 0 when i = 0 (mod 3), 1/sqrt(2) otherwise (0-based vertices). Requires n >= 3.
std::vector<double> cycle_packing_function(int n);

struct QuadraticPackingBound {
  /// ceil(sum f^2 - 1e-9), a lower bound on the homological connectivity of I(G).
  int eta_bound = 0;
  double value = 0.0;
  /// Gershgorin bound of the symmetrized Laplacian with weights f^2; at most 1.
  double gershgorin = 0.0;
};

/// Throws InputError if f is not a fractional quadratic packing.
QuadraticPackingBound quadratic_packing_eta_bound(const Graph& g, std::span<const double> f);

/// deg(v) f(v) + sum_{u in N(v)} f(u) <= 1 at every vertex, within 1e-9; value = sum f.
InequalityCheck verify_star_dominating_dual(const Graph& g, std::span<const double> f);

/// P : V -> R^dim with P(u).P(v) >= 1 on edges and >= 0 on non-edges.
struct VectorRepresentation {
  int dim = 0;
  std::vector<std::vector<double>> vectors;
};

/// Throws InputError on a vector count or length mismatch.
bool verify_vector_representation(const Graph& g, const VectorRepresentation& p);

/// Number of (k+1)-subsets I with sum_{u in I} P(u).s >= sum(f), s = sum_v f(v) P(v).
std::uint64_t vector_rep_betti_bound(const Graph& g, const VectorRepresentation& p,
                                     std::span<const double> f, int k);

/// Closed neighborhoods of the members of s are pairwise disjoint.
bool verify_neighborhood_packing(const Graph& g, std::span<const Vertex> s);

struct PackingResult {
  std::size_t size = 0;
  std::vector<Vertex> witness;
};

inline constexpr int kMaxPackingSearchVertices = 24;

/// Exact maximum neighborhood packing by branch and bound. Requires n <= 24.
PackingResult max_neighborhood_packing(const Graph& g);

/// sum_{m=|S|}^{k+1} C(deg S, m) C(n - deg S, k + 1 - m). Throws InputError if s is not a packing.
std::uint64_t packing_betti_bound(const Graph& g, std::span<const Vertex> s, int k);

/// max over k-subsets sigma of sum_{i in sigma} m_ii + sum_{i in sigma, j not in sigma} |m_ij|.
double merris_ksum_bound(const SymMatrix& m, int k);

struct MerrisGraphBounds {
  /// 2 * max_sigma |{e : e ∩ sigma nonempty}|, bounding mu_k(L(G)).
  double laplacian = 0.0;
  /// max_sigma |{e : |e ∩ sigma| = 1}|, bounding mu_k(A(G)).
  double adjacency = 0.0;
};

MerrisGraphBounds graph_merris_bounds(const Graph& g, int k);

/// Largest value over k-faces sigma of X(G) of
///   sum_{v in sigma} sum_{u in N(v)} w(u) - sum_{v in N_X(sigma)} w(v) - k sum(w),
/// which is never positive; -inf when X(G) has no k-faces.
double degree_sum_excess(const Graph& g, const WeightFunction& w, int k);

/// Number of m-subsets of `values` whose sum is >= threshold. Enumeration is capped.
std::uint64_t count_subset_sums_at_least(std::span<const double> values, int m, double threshold);

}  // namespace indlap
