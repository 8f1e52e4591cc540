#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "indlap/cli.hpp"
#include "indlap/graph.hpp"
#include "indlap/matrix.hpp"
#include "oracles.hpp"

using namespace indlap;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "indlap");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("indlap_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    return {std::istreambuf_iterator<char>(in), {}};
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("gen writes graph files") {
  Scratch s;
  CHECK(run({"gen", "matching", "3", "-o", s.path("m3.g")}).code == 0);
  std::istringstream m3(s.read("m3.g"));
  const Graph g = read_graph(m3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);

  CHECK(run({"gen", "cycle", "6", "-o", s.path("c6.g")}).code == 0);
  std::istringstream c6(s.read("c6.g"));
  CHECK(read_graph(c6) == gen::cycle(6));

  const Result a = run({"gen", "random", "8", "0.4", "--seed", "7"});
  const Result b = run({"gen", "random", "8", "0.4", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"gen", "random", "8", "0.4", "--seed", "8"}).out);

  CHECK(run({"gen", "cycle", "2"}).code == 2);
  CHECK(run({"gen", "random", "5"}).code == 2);
  CHECK(run({"gen", "triangle", "3"}).code == 2);
  CHECK(run({"gen", "matching", "x"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze reports") {
  Scratch s;
  run({"gen", "matching", "2", "-o", s.path("m2.g")});
  const Result r = run({"analyze", s.path("m2.g")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["betti"] == nlohmann::json::array({0, 1}));
  CHECK(j["eta"]["value"] == 2);
  CHECK(j["f_vector"] == nlohmann::json::array({4, 4}));
  CHECK(j.contains("tolerances"));
  CHECK(j["graph_laplacian_spectrum"].size() == 4);
  for (const auto& dim : j["dimensions"]) {
    const auto& slacks = dim["lower_bound"]["slacks"];
    const int k = dim["k"];
    const std::size_t equal = k == 0 ? 4 : 3;
    for (std::size_t i = 0; i < equal; ++i) CHECK(std::abs(slacks[i].get<double>()) < 1e-9);
  }

  run({"gen", "cycle", "6", "-o", s.path("c6.g")});
  std::ofstream(s.path("c6.w")) << run({"weights", "cycle-packing", "6"}).out;
  const auto c6 = nlohmann::json::parse(run({"analyze", s.path("c6.g"), "--weights", s.path("c6.w")}).out);
  CHECK(c6["eta_bound"]["value"].get<int>() >= 2);
  CHECK(c6["eta"]["value"] == 2);

  run({"gen", "empty", "4", "-o", s.path("e4.g")});
  const auto e4 = nlohmann::json::parse(run({"analyze", s.path("e4.g")}).out);
  for (const auto& b : e4["betti"]) CHECK(b == 0);

  CHECK(run({"analyze", s.path("missing.g")}).code == 2);
  CHECK(run({"analyze", s.write("bad.g", "3 1\n0 7\n")}).code == 2);
  run({"gen", "empty", "40", "-o", s.path("e40.g")});
  CHECK(run({"analyze", s.path("e40.g"), "--max-dim", "6"}).code == 3);
}

TEST_CASE("verify-bounds exit codes") {
  Scratch s;
  run({"gen", "matching", "2", "-o", s.path("m2.g")});
  run({"gen", "complete", "3", "-o", s.path("k3.g")});
  const Result all = run({"verify-bounds", s.path("m2.g"), "--all"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify-bounds", s.path("k3.g"), "--theorem", "merris"}).code == 0);
  CHECK(run({"verify-bounds", s.path("k3.g")}).code == 2);
  CHECK(run({"verify-bounds", s.path("k3.g"), "--theorem", "nonsense"}).code == 2);

  cli::Hooks corrupt;
  corrupt.tamper_k_laplacian = [](int k, Matrix& m) {
    if (k == 0) m(0, 0) -= 1.0;
  };
  const Result bad = run({"verify-bounds", s.path("m2.g"), "--theorem", "independence"}, corrupt);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL independence_laplacian_lower_bound k=0 index=") != std::string::npos);

  cli::Hooks nudge;
  nudge.tamper_k_laplacian = [](int, Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1e-4;
  };
  CHECK(run({"verify-bounds", s.path("m2.g"), "--theorem", "independence"}, nudge).code == 1);
  CHECK(run({"verify-bounds", s.path("m2.g"), "--theorem", "independence", "--tolerance-scale", "1e4"},
            nudge).code == 0);
}

TEST_CASE("compound command") {
  Scratch s;
  const std::string diag = s.write("d.m", "3 3\n1 0 0\n0 2 0\n0 0 3\n");
  std::istringstream out2(run({"compound", diag, "2"}).out);
  CHECK(read_matrix(out2) == Matrix::diagonal(std::vector<double>{3, 4, 5}));
  std::istringstream out1(run({"compound", diag, "1"}).out);
  CHECK(read_matrix(out1) == Matrix::diagonal(std::vector<double>{1, 2, 3}));

  std::mt19937_64 rng(3);
  std::ostringstream text;
  write_matrix(text, oracle::random_symmetric(5, rng));
  const std::string sym = s.write("r.m", text.str());
  const Result checked = run({"compound", sym, "3", "--check"});
  CHECK(checked.code == 0);
  const auto pos = checked.err.find("max deviation: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(checked.err.substr(pos + 15)) < 1e-8);

  CHECK(run({"compound", diag, "0"}).code == 2);
  CHECK(run({"compound", diag, "4"}).code == 2);
  CHECK(run({"compound", s.write("a.m", "2 2\n0 1\n0 0\n"), "1", "--check"}).code == 2);
  CHECK(run({"compound", s.write("ns.m", "2 3\n0 1 2\n0 0 0\n"), "1"}).code == 2);
}
