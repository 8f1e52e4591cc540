#include "indlap/report.hpp"

#include <algorithm>

#include "indlap/complex.hpp"
#include "indlap/errors.hpp"
#include "indlap/laplacian.hpp"
#include "indlap/spectral.hpp"

namespace indlap {

using nlohmann::json;

json to_json(const BoundReport& r) {
  return json{{"theorem", r.theorem},   {"parameters", r.parameters}, {"bounds", r.bounds},
              {"actuals", r.actuals},   {"slacks", r.slacks},         {"slack", r.slack},
              {"holds", r.holds},       {"tolerance", r.tolerance},   {"scale", r.scale},
              {"worst_index", r.worst_index}};
}

json to_json(const BettiVector& b) {
  return json{{"values", b.values}, {"method", to_string(b.method)}, {"cutoff", b.cutoff}};
}

json tolerance_constants() {
  return json{{"bound", "1e-7 * (1 + scale)"},
              {"count", "1e-9 * (1 + scale)"},
              {"kernel", "max(dim, 16) * 2^-52 * max(1, scale) * 64"},
              {"jacobi_offdiag", 1e-13},
              {"jacobi_max_sweeps", 30}};
}

json analyze(const Graph& g, const WeightFunction& w, int max_dim) {
  if (max_dim < 0) throw InputError("analyze: max_dim must be >= 0");
  if (w.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError("analyze: weight length does not match the vertex count");
  if (g.vertex_count() == 0) throw InputError("analyze: graph has no vertices");

  const SimplicialComplex x = independence_complex(g, max_dim + 1);
  const int top = std::min(max_dim, x.top_dim());
  const Spectrum graph_spec = sym_eigenvalues(sym_weighted_laplacian(g, w));

  json report;
  report["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
  report["weights"] = std::vector<double>(w.values().begin(), w.values().end());
  report["total_weight"] = w.total();
  report["max_dim"] = max_dim;
  report["tolerances"] = tolerance_constants();
  report["f_vector"] = x.f_vector();
  report["complex_complete"] = x.complete();
  report["graph_laplacian_spectrum"] =
      std::vector<double>(graph_spec.values().begin(), graph_spec.values().end());

  const BettiVector betti = betti_rank_oracle(x, top);
  json dims = json::array();
  for (int k = 0; k <= top; ++k) {
    const Spectrum spec = sym_eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k));
    json entry;
    entry["k"] = k;
    entry["spectrum"] = std::vector<double>(spec.values().begin(), spec.values().end());
    entry["kernel_tolerance"] = kernel_tolerance(spec);
    entry["kernel_dimension"] = kernel_dimension(spec);
    entry["lower_bound"] = to_json(independence_bounds_from_spectra(spec, graph_spec, w.total(), k));
    entry["betti_count_bound"] = betti_upper_bound(g, w, k);
    entry["betti"] = betti.values[k];
    dims.push_back(std::move(entry));
  }
  report["dimensions"] = std::move(dims);
  report["betti"] = betti.values;
  report["betti_method"] = to_string(betti.method);

  const Connectivity eta = homological_connectivity(x, top);
  report["eta"] = {{"value", eta.value}, {"exact", eta.exact}};
  if (w.all_zero()) {
    report["eta_bound"] = nullptr;
  } else {
    const ConnectivityBound bound = connectivity_lower_bound(g, w);
    report["eta_bound"] = {{"value", bound.value}, {"vacuous", bound.vacuous}};
  }
  return report;
}

}  // namespace indlap
