#include "indlap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "indlap/bounds.hpp"
#include "indlap/complex.hpp"
#include "indlap/compound.hpp"
#include "indlap/errors.hpp"
#include "indlap/graph.hpp"
#include "indlap/homology.hpp"
#include "indlap/laplacian.hpp"
#include "indlap/report.hpp"
#include "indlap/spectral.hpp"

namespace indlap::cli {

namespace {

const std::vector<std::string> kTheorems = {"independence", "clique",  "betti",
                                            "connectivity", "merris", "packing"};

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return static_cast<int>(v);
  } catch (const std::logic_error&) {
  }
  throw InputError(std::string(what) + ": expected an integer, got '" + s + "'");
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError(std::string(what) + ": expected a number, got '" + s + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

WeightFunction load_weights(const std::string& path, int n) {
  if (path.empty()) return WeightFunction::constant(n, 1.0);
  auto in = open_input(path);
  return read_weights(in, n);
}

// Writes through `emit` to the -o path if given, otherwise to `out`.
template <typename Emit>
void write_output(const std::string& path, std::ostream& out, Emit&& emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  emit(file);
}

GraphSpec parse_graph_spec(const std::string& kind, const std::vector<std::string>& params,
                           std::uint64_t seed) {
  GraphSpec spec;
  spec.seed = seed;
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      std::ostringstream msg;
      msg << "gen " << kind << " takes " << count << " parameter(s)";
      throw InputError(msg.str());
    }
  };
  if (kind == "matching") {
    spec.kind = GraphSpec::Kind::matching;
  } else if (kind == "cycle") {
    spec.kind = GraphSpec::Kind::cycle;
  } else if (kind == "complete") {
    spec.kind = GraphSpec::Kind::complete;
  } else if (kind == "empty") {
    spec.kind = GraphSpec::Kind::empty;
  } else if (kind == "random") {
    spec.kind = GraphSpec::Kind::random;
    need(2);
    spec.size = parse_int(params[0], "random n");
    spec.p = parse_double(params[1], "random p");
    return spec;
  } else {
    throw InputError("unknown graph kind '" + kind + "'");
  }
  need(1);
  spec.size = parse_int(params[0], "size");
  return spec;
}

std::string describe(const GraphSpec& spec, const std::string& kind,
                     const std::vector<std::string>& params) {
  std::string out = kind;
  for (const auto& p : params) out += " " + p;
  if (spec.kind == GraphSpec::Kind::random) out += " seed=" + std::to_string(spec.seed);
  return out;
}

struct VerifyOptions {
  std::string graph;
  std::string weights;
  std::vector<std::string> theorems;
  bool all = false;
  int max_dim = 3;
  double tolerance_scale = 1.0;
};

class Verifier {
 public:
  Verifier(std::ostream& out, double tolerance_scale) : out_(out), scale_(tolerance_scale) {}

  void record(const BoundReport& r, int k) {
    const bool holds = r.slack >= -scale_ * r.tolerance;
    line(holds, r.theorem, k, r.worst_index, r.slack);
  }

  void record_count(const std::string& name, int k, double bound, double actual,
                    double tolerance = 0.0) {
    line(bound - actual >= -scale_ * tolerance, name, k, 1, bound - actual);
  }

  bool all_hold() const noexcept { return failures_ == 0; }

 private:
  void line(bool holds, const std::string& name, int k, std::size_t index, double slack) {
    if (!holds) ++failures_;
    out_ << (holds ? "PASS " : "FAIL ") << name << " k=" << k;
    if (!holds) out_ << " index=" << index;
    out_ << " slack=" << slack << '\n';
  }

  std::ostream& out_;
  double scale_;
  int failures_ = 0;
};

int verify_bounds(const VerifyOptions& opt, std::ostream& out, const Hooks& hooks) {
  std::vector<std::string> selected = opt.all ? kTheorems : opt.theorems;
  if (selected.empty()) throw InputError("verify-bounds: pass --all or --theorem NAME");
  for (const auto& t : selected)
    if (std::find(kTheorems.begin(), kTheorems.end(), t) == kTheorems.end())
      throw InputError("verify-bounds: unknown theorem '" + t + "'");
  auto wants = [&](const char* name) {
    return std::find(selected.begin(), selected.end(), name) != selected.end();
  };
  if (opt.max_dim < 0) throw InputError("verify-bounds: --max-dim must be >= 0");
  if (!(opt.tolerance_scale >= 0.0)) throw InputError("--tolerance-scale must be >= 0");

  const Graph g = load_graph(opt.graph);
  const WeightFunction w = load_weights(opt.weights, g.vertex_count());
  if (g.vertex_count() == 0) throw InputError("verify-bounds: graph has no vertices");
  const SimplicialComplex x = independence_complex(g, opt.max_dim + 1);
  const int top = std::min(opt.max_dim, x.top_dim());
  const Spectrum graph_spec = sym_eigenvalues(sym_weighted_laplacian(g, w));
  Verifier v(out, opt.tolerance_scale);

  if (wants("independence")) {
    for (int k = 0; k <= top; ++k) {
      Matrix lk = sym_vertex_weighted_k_laplacian(x, w, k).matrix();
      if (hooks.tamper_k_laplacian) hooks.tamper_k_laplacian(k, lk);
      const Spectrum actual = sym_eigenvalues(SymMatrix(std::move(lk)));
      v.record(independence_bounds_from_spectra(actual, graph_spec, w.total(), k), k);
    }
  }
  if (wants("clique")) {
    const SimplicialComplex cx = clique_complex(g, opt.max_dim + 1);
    const int clique_top = std::min(opt.max_dim, cx.top_dim());
    for (int k = 0; k <= clique_top; ++k) v.record(main_clique_bounds(g, w, k), k);
  }

  const bool needs_betti = wants("betti") || wants("connectivity") || wants("packing");
  const BettiVector betti = needs_betti ? betti_rank_oracle(x, top) : BettiVector{};
  if (wants("betti")) {
    for (int k = 0; k <= top; ++k)
      v.record_count("betti_count_bound", k, static_cast<double>(betti_upper_bound(g, w, k)),
                     static_cast<double>(betti.values[k]));
  }
  if (wants("connectivity") && !w.all_zero()) {
    const ConnectivityBound bound = connectivity_lower_bound(g, w);
    // Every beta_i with i <= bound - 2 must vanish.
    double worst = 0.0;
    for (int i = 0; i <= std::min(bound.value - 2, top); ++i)
      worst = std::max(worst, static_cast<double>(betti.values[i]));
    v.record_count("connectivity_lower_bound", bound.value, 0.0, worst);
  }
  if (wants("merris")) {
    const SymMatrix lap_matrix =
        sym_weighted_laplacian(g, WeightFunction::constant(g.vertex_count(), 1.0));
    const Spectrum lap = sym_eigenvalues(lap_matrix);
    const Spectrum adj_spec = sym_eigenvalues(adjacency_matrix(g));
    double lap_sum = 0.0;
    double adj_sum = 0.0;
    for (int k = 1; k <= g.vertex_count(); ++k) {
      if (binomial(g.vertex_count(), k) > kMaxSubsetEnumeration) break;
      lap_sum += lap.largest(k);
      adj_sum += adj_spec.largest(k);
      const MerrisGraphBounds b = graph_merris_bounds(g, k);
      const double tol = bound_tolerance(lap.scale() * k);
      v.record_count("merris_laplacian", k, b.laplacian, lap_sum, tol);
      v.record_count("merris_adjacency", k, b.adjacency, adj_sum, tol);
      v.record_count("merris_ksum", k, merris_ksum_bound(lap_matrix, k), lap_sum, tol);
    }
  }
  if (wants("packing") && g.vertex_count() <= kMaxPackingSearchVertices) {
    const PackingResult packing = max_neighborhood_packing(g);
    for (int k = 0; k <= top; ++k)
      v.record_count("packing_betti_bound", k,
                     static_cast<double>(packing_betti_bound(g, packing.witness, k)),
                     static_cast<double>(betti.values[k]));
  }
  return v.all_hold() ? ok : bound_violated;
}

int compound_command(const std::string& path, int k, bool check, const std::string& output,
                     std::ostream& out, std::ostream& err) {
  auto in = open_input(path);
  const Matrix m = read_matrix(in);
  if (!m.is_square()) throw InputError("compound: matrix must be square");
  if (k < 1 || k > static_cast<int>(m.rows()))
    throw InputError("compound: k must lie in 1.." + std::to_string(m.rows()));
  if (!check) {
    const Matrix c = additive_compound(m, k);
    write_output(output, out, [&](std::ostream& o) { write_matrix(o, c); });
    return ok;
  }

  const SymMatrix sym(m);
  const Matrix c = additive_compound(m, k);
  write_output(output, out, [&](std::ostream& o) { write_matrix(o, c); });
  const Spectrum compound_spec = sym_eigenvalues(SymMatrix(c));
  const KSumSpectrum sums = k_sum_spectrum(sym_eigenvalues(sym), k);
  double deviation = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i)
    deviation = std::max(deviation, std::abs(compound_spec.values()[i] - sums.values()[i]));
  const double tol = 1e-8 * (1.0 + m.inf_norm());
  err << "max deviation: " << deviation << " (tolerance " << tol << ")\n";
  return deviation <= tol ? ok : bound_violated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Spectral bounds and homology of independence complexes"};
  app.require_subcommand(1);

  std::string kind;
  std::vector<std::string> params;
  std::string output;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph file");
  gen_cmd->add_option("kind", kind, "matching | cycle | complete | empty | random")->required();
  gen_cmd->add_option("params", params, "size, or 'n p' for random")->required();
  gen_cmd->add_option("-o,--output", output, "Output path (default stdout)");
  gen_cmd->add_option("--seed", seed, "Seed for random graphs");

  std::string weight_kind;
  std::vector<std::string> weight_params;
  auto* weights_cmd = app.add_subcommand("weights", "Write a weight file");
  weights_cmd->add_option("kind", weight_kind, "cycle-packing N | constant N VALUE")->required();
  weights_cmd->add_option("params", weight_params)->required();
  weights_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  std::string graph_path;
  std::string weights_path;
  int max_dim = 3;
  auto* analyze_cmd = app.add_subcommand("analyze", "JSON analysis of I(G)");
  analyze_cmd->add_option("graph", graph_path)->required();
  analyze_cmd->add_option("--weights", weights_path, "Weight file (default all 1)");
  analyze_cmd->add_option("--max-dim", max_dim, "Highest Laplacian dimension analysed");
  analyze_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify-bounds", "Check bound suites; exit 1 on violation");
  verify_cmd->add_option("graph", verify.graph)->required();
  verify_cmd->add_flag("--all", verify.all, "Run every suite");
  verify_cmd->add_option("--theorem", verify.theorems,
                         "independence | clique | betti | connectivity | merris | packing");
  verify_cmd->add_option("--weights", verify.weights, "Weight file (default all 1)");
  verify_cmd->add_option("--max-dim", verify.max_dim, "Highest dimension checked");
  verify_cmd->add_option("--tolerance-scale", verify.tolerance_scale,
                         "Multiplier on the bound tolerance");

  std::string matrix_path;
  int compound_k = 0;
  bool check = false;
  auto* compound_cmd = app.add_subcommand("compound", "Write the k-th additive compound");
  compound_cmd->add_option("matrix", matrix_path)->required();
  compound_cmd->add_option("k", compound_k)->required();
  compound_cmd->add_flag("--check", check, "Compare its spectrum with the k-sums");
  compound_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*gen_cmd) {
      const GraphSpec spec = parse_graph_spec(kind, params, seed);
      const Graph g = generate(spec);
      write_output(output, out,
                   [&](std::ostream& o) { write_graph(o, g, describe(spec, kind, params)); });
      return ok;
    }
    if (*weights_cmd) {
      WeightFunction w;
      if (weight_kind == "cycle-packing" && weight_params.size() == 1) {
        auto f = cycle_packing_function(parse_int(weight_params[0], "cycle-packing n"));
        for (double& v : f) v *= v;
        w = WeightFunction(std::move(f));
      } else if (weight_kind == "constant" && weight_params.size() == 2) {
        w = WeightFunction::constant(parse_int(weight_params[0], "constant n"),
                                     parse_double(weight_params[1], "constant value"));
      } else {
        throw InputError("weights: expected 'cycle-packing N' or 'constant N VALUE'");
      }
      write_output(output, out, [&](std::ostream& o) { write_weights(o, w); });
      return ok;
    }
    if (*analyze_cmd) {
      const Graph g = load_graph(graph_path);
      const WeightFunction w = load_weights(weights_path, g.vertex_count());
      const auto report = analyze(g, w, max_dim);
      write_output(output, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
      return ok;
    }
    if (*verify_cmd) return verify_bounds(verify, out, hooks);
    if (*compound_cmd) return compound_command(matrix_path, compound_k, check, output, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource_error;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return resource_error;
  }
  return input_error;
}

}  // namespace indlap::cli
