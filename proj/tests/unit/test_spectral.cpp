#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indlap/complex.hpp"
#include "indlap/errors.hpp"
#include "indlap/graph.hpp"
#include "indlap/laplacian.hpp"
#include "indlap/spectral.hpp"
#include "oracles.hpp"

using namespace indlap;

TEST_CASE("closed-form spectra") {
  const Matrix two{[] {
    Matrix m(2, 2);
    m(0, 0) = 2, m(0, 1) = -1, m(1, 0) = -1, m(1, 1) = 2;
    return m;
  }()};
  const Spectrum s = sym_eigenvalues(SymMatrix(two));
  const auto [lo, hi] = oracle::eigen_2x2(2, -1, -1, 2);
  CHECK(std::abs(s.smallest(1) - lo) < 1e-15);
  CHECK(std::abs(s.largest(1) - hi) < 1e-15);
  CHECK(std::abs(lo - 1) < 1e-15);
  CHECK(s.scale() == 3);

  for (int n = 1; n <= 8; ++n) {
    const Spectrum k = sym_eigenvalues(sym_weighted_laplacian(gen::complete(n), WeightFunction::constant(n, 1.0)));
    CHECK(std::abs(k.smallest(1)) < 1e-12);
    for (int i = 2; i <= n; ++i) CHECK(std::abs(k.smallest(i) - n) < 1e-12);
  }

  const SimplicialComplex sq = independence_complex(gen::matching(2));
  const Spectrum l0 = sym_eigenvalues(sym_vertex_weighted_k_laplacian(sq, WeightFunction::constant(4, 1.0), 0));
  CHECK(oracle::max_abs_diff({2, 2, 4, 4}, l0.values()) < 1e-12);
  CHECK(sym_eigenvalues(SymMatrix(Matrix())).size() == 0);
}

TEST_CASE("planted spectra are recovered") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 30;
    std::vector<double> lambda(n);
    for (double& x : lambda) x = oracle::uniform(rng, -10, 10);
    if (trial % 4 == 0 && n > 2) lambda[1] = lambda[0];  // repeated eigenvalue
    const Matrix m = oracle::planted(lambda, oracle::random_orthogonal(n, rng));
    std::sort(lambda.begin(), lambda.end());
    const double norm = std::max(std::abs(lambda.front()), std::abs(lambda.back()));
    CHECK(oracle::max_abs_diff(lambda, sym_eigenvalues(SymMatrix(m)).values()) <= 1e-9 * (1 + norm));
  }
}

TEST_CASE("Weyl, Cauchy interlacing and Gershgorin on random matrices") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 9;
    const Matrix a = oracle::random_symmetric(n, rng, 2.0);
    const Matrix b = oracle::random_symmetric(n, rng, 2.0);
    const Spectrum sa = sym_eigenvalues(SymMatrix(a));
    const Spectrum sb = sym_eigenvalues(SymMatrix(b));
    const Spectrum sab = sym_eigenvalues(SymMatrix(a + b));
    for (int i = 1; i <= n; ++i) CHECK(sab.smallest(i) >= sa.smallest(i) + sb.smallest(1) - 1e-8);

    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) keep.push_back(i);
    if (keep.empty()) keep.push_back(0);
    const int m = static_cast<int>(keep.size());
    Matrix sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub(i, j) = a(keep[i], keep[j]);
    const Spectrum ss = sym_eigenvalues(SymMatrix(sub));
    for (int i = 1; i <= m; ++i) {
      CHECK(sa.smallest(i) <= ss.smallest(i) + 1e-8);
      CHECK(ss.smallest(i) <= sa.smallest(n - m + i) + 1e-8);
    }

    const double bound = gershgorin_bound(a);
    for (double x : sa.values()) CHECK(std::abs(x) <= bound + 1e-8);
  }
}

TEST_CASE("asymmetric input is rejected") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(SymMatrix{m}, InputError);
  CHECK_THROWS_AS(SymMatrix{Matrix(2, 3)}, InputError);
}

TEST_CASE("iteration cap raises a numeric error") {
  std::mt19937_64 rng(23);
  const Matrix m = oracle::random_symmetric(12, rng);
  JacobiOptions opts;
  opts.max_sweeps = 1;
  CHECK_THROWS_AS(sym_eigenvalues(SymMatrix(m), opts), NumericError);
}

TEST_CASE("non-symmetric Laplacians through their symmetric counterpart") {
  const Matrix k2 = weighted_laplacian(gen::complete(2), WeightFunction({1.0, 4.0}));
  CHECK(oracle::max_abs_diff({0, 5}, nonsym_eigenvalues_real(k2).values()) < 1e-12);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::corpus_random_graph(i);
    const WeightFunction one = WeightFunction::constant(g.vertex_count(), 1.0);
    const Spectrum a = nonsym_eigenvalues_real(weighted_laplacian(g, one));
    const Spectrum b = sym_eigenvalues(sym_weighted_laplacian(g, one));
    CHECK(oracle::max_abs_diff({b.values().begin(), b.values().end()}, a.values()) == 0.0);
  }
  // A zero weight makes the matrix only a limit of similar ones; compare with w_eps.
  const Graph p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const WeightFunction wz({1.0, 0.0, 2.0});
  const Spectrum degenerate = nonsym_eigenvalues_real(weighted_laplacian(p3, wz));
  const Spectrum limit = sym_eigenvalues(sym_weighted_laplacian(p3, wz.perturbed(1e-6)));
  CHECK(oracle::max_abs_diff({limit.values().begin(), limit.values().end()}, degenerate.values()) < 1e-3);

  Matrix opposite(2, 2);
  opposite(0, 1) = 1.0;
  opposite(1, 0) = -1.0;
  CHECK_THROWS_AS(nonsym_eigenvalues_real(opposite), InputError);
}

TEST_CASE("kernel dimension") {
  CHECK(kernel_dimension(Spectrum({0, 2, 2, 4}, 4)) == 1);
  CHECK(kernel_dimension(Spectrum({1e-18, 1e-17, 5}, 5)) == 2);
  const SimplicialComplex sq = independence_complex(gen::matching(2));
  const Spectrum l1 = sym_eigenvalues(sym_vertex_weighted_k_laplacian(sq, WeightFunction::constant(4, 1.0), 1));
  CHECK(kernel_dimension(l1) == 1);
  const Spectrum big({0, 1}, 1e6);
  CHECK(kernel_tolerance(big) == doctest::Approx(16 * 0x1.0p-52 * 1e6 * 64));
}

TEST_CASE("Gershgorin bound") {
  CHECK(gershgorin_bound(Matrix::diagonal(std::vector<double>{1, -3, 2})) == 3);
  CHECK(gershgorin_bound(weighted_laplacian(gen::complete(3), WeightFunction::constant(3, 1.0))) == 4);
}
