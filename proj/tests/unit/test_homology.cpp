#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indlap/complex.hpp"
#include "indlap/errors.hpp"
#include "indlap/homology.hpp"
#include "indlap/laplacian.hpp"
#include "indlap/spectral.hpp"
#include "oracles.hpp"

using namespace indlap;

namespace {

std::vector<std::size_t> betti(const SimplicialComplex& x, int k) {
  return betti_rank_oracle(x, k).values;
}

}  // namespace

TEST_CASE("exact rank") {
  CHECK(exact_rank(Matrix(3, 4)) == 0);
  CHECK(exact_rank(Matrix::identity(5)) == 5);
  Matrix m(3, 3, 1.0);
  CHECK(exact_rank(m) == 1);
  m(2, 2) = -1.0;
  CHECK(exact_rank(m) == 2);
  CHECK(exact_rank(Matrix()) == 0);
}

TEST_CASE("Betti numbers of spheres and simplices") {
  CHECK(betti(independence_complex(gen::matching(2)), 1) == std::vector<std::size_t>{0, 1});
  CHECK(betti(independence_complex(gen::matching(3)), 2) == std::vector<std::size_t>{0, 0, 1});
  CHECK(betti(independence_complex(gen::matching(4)), 3) == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(betti(independence_complex(gen::empty(4)), 2) == std::vector<std::size_t>{0, 0, 0});
  // Four isolated points: reduced H_0 has rank 3.
  CHECK(betti(independence_complex(gen::complete(4)), 1) == std::vector<std::size_t>{3, 0});
  const BettiVector h = betti_hodge(independence_complex(gen::matching(2)), WeightFunction::constant(4, 1.0), 1);
  CHECK(h.values == std::vector<std::size_t>{0, 1});
  CHECK(h.method == BettiVector::Method::hodge);
}

TEST_CASE("Hodge and rank oracle agree") {
  const auto corpus = oracle::graph_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 7) {
    const SimplicialComplex x = independence_complex(corpus[i]);
    const int top = std::min(3, x.top_dim());
    const auto exact = betti_rank_oracle(x, top).values;
    CHECK(betti_hodge(x, WeightFunction::constant(corpus[i].vertex_count(), 1.0), top).values == exact);
    CHECK(betti_hodge(x, oracle::positive_weights(corpus[i].vertex_count(), i), top).values == exact);
  }
}

TEST_CASE("Euler-Poincare") {
  const auto corpus = oracle::graph_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 5) {
    const SimplicialComplex x = independence_complex(corpus[i], corpus[i].vertex_count());
    REQUIRE(x.complete());
    const int top = x.top_dim();
    const auto b = betti_rank_oracle(x, top).values;
    long euler = -1;
    long alternating = 0;
    for (int k = 0; k <= top; ++k) {
      const long sign = k % 2 == 0 ? 1 : -1;
      euler += sign * static_cast<long>(x.face_count(k));
      alternating += sign * static_cast<long>(b[k]);
    }
    CHECK(euler == alternating);
  }
}

TEST_CASE("degenerate weights can only enlarge the kernel") {
  const auto corpus = oracle::graph_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 3) {
    const SimplicialComplex x = independence_complex(corpus[i]);
    const int top = std::min(3, x.top_dim());
    const auto exact = betti_rank_oracle(x, top).values;
    const WeightFunction wz = oracle::weights_with_zeros(corpus[i].vertex_count(), 31 * i);
    for (int k = 0; k <= top; ++k)
      CHECK(exact[k] <= kernel_dimension(sym_eigenvalues(sym_vertex_weighted_k_laplacian(x, wz, k))));
  }
}

TEST_CASE("homological connectivity") {
  for (int r = 1; r <= 4; ++r) {
    const Connectivity c = homological_connectivity(independence_complex(gen::matching(r)), r - 1);
    CHECK(c.value == r);
    CHECK(c.exact);
  }
  const Connectivity c6 = homological_connectivity(independence_complex(gen::cycle(6)), 2);
  CHECK(c6.value == 2);
  CHECK(c6.exact);
  const Connectivity simplex = homological_connectivity(independence_complex(gen::empty(4)), 2);
  CHECK(simplex.value == 3);
  CHECK_FALSE(simplex.exact);
}

TEST_CASE("input validation") {
  const SimplicialComplex x = independence_complex(gen::empty(5), 1);
  CHECK_THROWS_AS(betti_rank_oracle(x, 1), InputError);
  CHECK_THROWS_AS(betti_rank_oracle(x, -1), InputError);
  CHECK_THROWS_AS(betti_hodge(independence_complex(gen::matching(2)), WeightFunction({1, 0, 1, 1}), 1), InputError);
  CHECK_THROWS_AS(homological_connectivity(independence_complex(Graph(0)), 0), InputError);
}
