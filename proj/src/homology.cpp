#include "indlap/homology.hpp"

#include <gmpxx.h>

#include <cmath>
#include <sstream>

#include "indlap/errors.hpp"
#include "indlap/laplacian.hpp"
#include "indlap/spectral.hpp"

namespace indlap {

std::string_view to_string(BettiVector::Method m) noexcept {
  return m == BettiVector::Method::hodge ? "hodge" : "rank-oracle";
}

std::size_t exact_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = m(i, j);
      if (v != std::floor(v) || std::abs(v) > 1e15)
        throw InputError("exact_rank: entries must be integers");
      a[i][j] = static_cast<long>(v);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpq_class inv = 1 / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      const mpq_class factor = a[r][col];
      for (std::size_t j = col; j < cols; ++j)
        if (sgn(a[rank][j]) != 0) a[r][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

void check_cutoff(const SimplicialComplex& x, int K, const char* what) {
  if (K < 0 || !x.knows_dim(K + 1)) {
    std::ostringstream msg;
    msg << what << ": cutoff K = " << K << " needs faces of dimension K + 1, complex stops at "
        << x.max_dim();
    throw InputError(msg.str());
  }
}

}  // namespace

BettiVector betti_rank_oracle(const SimplicialComplex& x, int K) {
  check_cutoff(x, K, "betti_rank_oracle");
  BettiVector out;
  out.method = BettiVector::Method::rank_oracle;
  out.cutoff = K;
  std::size_t rank_below = exact_rank(coboundary(x, -1));
  for (int k = 0; k <= K; ++k) {
    const std::size_t fk = x.face_count(k);
    const std::size_t rank_here = fk == 0 ? 0 : exact_rank(coboundary(x, k));
    out.values.push_back(fk - rank_here - rank_below);
    rank_below = rank_here;
  }
  return out;
}

BettiVector betti_hodge(const SimplicialComplex& x, const WeightFunction& w, int K) {
  check_cutoff(x, K, "betti_hodge");
  if (!w.strictly_positive()) throw InputError("betti_hodge: weights must be strictly positive");
  BettiVector out;
  out.method = BettiVector::Method::hodge;
  out.cutoff = K;
  for (int k = 0; k <= K; ++k) {
    if (x.face_count(k) == 0) {
      out.values.push_back(0);
      continue;
    }
    out.values.push_back(kernel_dimension(sym_eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k))));
  }
  return out;
}

Connectivity homological_connectivity(const SimplicialComplex& x, int K) {
  if (x.vertex_count() == 0 || x.face_count(0) == 0)
    throw InputError("homological_connectivity: complex is empty");
  const BettiVector betti = betti_rank_oracle(x, K);
  for (int i = 0; i <= K; ++i)
    if (betti.values[i] != 0) return {i + 1, true};
  return {K + 1, false};
}

}  // namespace indlap
