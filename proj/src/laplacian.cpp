#include "indlap/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "indlap/compound.hpp"
#include "indlap/errors.hpp"

namespace indlap {

FaceWeights::FaceWeights(const SimplicialComplex& x, std::vector<std::vector<double>> by_dim)
    : by_dim_(std::move(by_dim)) {
  if (static_cast<int>(by_dim_.size()) != x.max_dim() + 1)
    throw InputError("FaceWeights: one weight vector per stored dimension is required");
  for (int k = 0; k <= x.max_dim(); ++k) {
    if (by_dim_[k].size() != x.face_count(k)) {
      std::ostringstream msg;
      msg << "FaceWeights: dimension " << k << " has " << by_dim_[k].size() << " weights for "
          << x.face_count(k) << " faces";
      throw InputError(msg.str());
    }
    for (double v : by_dim_[k])
      if (!(v > 0.0) || !std::isfinite(v)) throw InputError("FaceWeights: weights must be > 0");
  }
}

FaceWeights FaceWeights::constant(const SimplicialComplex& x, double value) {
  std::vector<std::vector<double>> by_dim;
  for (int k = 0; k <= x.max_dim(); ++k) by_dim.emplace_back(x.face_count(k), value);
  return FaceWeights(x, std::move(by_dim));
}

double FaceWeights::at(int k, std::size_t i) const {
  if (k == -1) return 1.0;
  if (k < -1 || k > max_dim() || i >= by_dim_[k].size()) {
    std::ostringstream msg;
    msg << "FaceWeights: no weight for face " << i << " of dimension " << k;
    throw InputError(msg.str());
  }
  return by_dim_[k][i];
}

FaceWeights extend_vertex_weights(const SimplicialComplex& x, const WeightFunction& w) {
  if (w.size() != static_cast<std::size_t>(x.vertex_count()))
    throw InputError("extend_vertex_weights: weight length does not match the vertex count");
  if (!w.strictly_positive())
    throw InputError("extend_vertex_weights: vertex weights must be strictly positive");
  std::vector<std::vector<double>> by_dim;
  for (int k = 0; k <= x.max_dim(); ++k) {
    std::vector<double> level;
    level.reserve(x.face_count(k));
    for (const Face& f : x.faces(k)) {
      double prod = 1.0;
      for (Vertex v : f) prod *= w[v];
      level.push_back(prod);
    }
    by_dim.push_back(std::move(level));
  }
  return FaceWeights(x, std::move(by_dim));
}

namespace {

void check_dimension(const SimplicialComplex& x, int k, const char* what) {
  if (k < 0) throw InputError(std::string(what) + ": k must be >= 0");
  if (!x.knows_dim(k + 1)) {
    std::ostringstream msg;
    msg << what << ": needs faces of dimension " << k + 1 << " but the complex stops at "
        << x.max_dim();
    throw InputError(msg.str());
  }
}

// Visits every ordered pair (sigma, tau) of k-faces sharing k vertices, passing
// (row, col, i, j, common) where sigma \ tau = {i}, tau \ sigma = {j}.
template <typename Visit>
void for_each_adjacent_pair(const SimplicialComplex& x, int k, Visit&& visit) {
  const auto faces = x.faces(k);
  Face common;
  Face tau;
  for (std::size_t a = 0; a < faces.size(); ++a) {
    const Face& sigma = faces[a];
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      const Vertex i = sigma[p];
      common.assign(sigma.begin(), sigma.end());
      common.erase(common.begin() + static_cast<std::ptrdiff_t>(p));
      for (Vertex j = 0; j < x.vertex_count(); ++j) {
        if (std::binary_search(sigma.begin(), sigma.end(), j)) continue;
        tau = common;
        tau.insert(std::upper_bound(tau.begin(), tau.end(), j), j);
        if (auto b = x.index_of(tau)) visit(a, *b, i, j, common);
      }
    }
  }
}

template <typename OffDiagonal>
Matrix assemble_vertex_weighted(const SimplicialComplex& x, const WeightFunction& w, int k,
                                const char* what, OffDiagonal&& off) {
  check_dimension(x, k, what);
  if (w.size() != static_cast<std::size_t>(x.vertex_count()))
    throw InputError(std::string(what) + ": weight length does not match the vertex count");
  const std::size_t fk = x.face_count(k);
  check_dense_dims(fk, fk, what);
  Matrix m(fk, fk);
  if (fk == 0) return m;

  const auto nbrs = all_simplex_neighbors(x, k);
  const auto faces = x.faces(k);
  for (std::size_t a = 0; a < fk; ++a) {
    double d = 0.0;
    for (Vertex u : nbrs[a]) d += w[u];
    for (Vertex v : faces[a]) d += w[v];
    m(a, a) = d;
  }
  for_each_adjacent_pair(x, k, [&](std::size_t a, std::size_t b, Vertex i, Vertex j,
                                   const Face& common) {
    // sigma ∪ tau = sigma + j is a face exactly when j is in N_X(sigma).
    if (std::binary_search(nbrs[a].begin(), nbrs[a].end(), j)) return;
    m(a, b) = swap_sign(common, i, j) * off(i, j);
  });
  return m;
}

}  // namespace

Matrix vertex_weighted_k_laplacian(const SimplicialComplex& x, const WeightFunction& w, int k) {
  return assemble_vertex_weighted(x, w, k, "vertex_weighted_k_laplacian",
                                  [&](Vertex, Vertex j) { return w[j]; });
}

SymMatrix sym_vertex_weighted_k_laplacian(const SimplicialComplex& x, const WeightFunction& w,
                                          int k) {
  return SymMatrix(assemble_vertex_weighted(x, w, k, "sym_vertex_weighted_k_laplacian",
                                            [&](Vertex i, Vertex j) { return std::sqrt(w[i] * w[j]); }));
}

Matrix horak_jost_k_laplacian(const SimplicialComplex& x, const FaceWeights& fw, int k) {
  check_dimension(x, k, "horak_jost_k_laplacian");
  const std::size_t fk = x.face_count(k);
  check_dense_dims(fk, fk, "horak_jost_k_laplacian");
  Matrix m(fk, fk);
  if (fk == 0) return m;

  auto weight_of = [&](const Face& f) {
    const int dim = static_cast<int>(f.size()) - 1;
    if (dim == -1) return 1.0;
    auto idx = x.index_of(f);
    if (!idx) throw InputError("horak_jost_k_laplacian: face missing from the complex");
    return fw.at(dim, *idx);
  };

  const auto faces = x.faces(k);
  const auto nbrs = all_simplex_neighbors(x, k);
  Face scratch;
  for (std::size_t a = 0; a < fk; ++a) {
    const Face& sigma = faces[a];
    const double ws = fw.at(k, a);
    double d = 0.0;
    for (Vertex u : nbrs[a]) {
      scratch = sigma;
      scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), u), u);
      d += weight_of(scratch) / ws;
    }
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      scratch = sigma;
      scratch.erase(scratch.begin() + static_cast<std::ptrdiff_t>(p));
      d += ws / weight_of(scratch);
    }
    m(a, a) = d;
  }
  for_each_adjacent_pair(x, k, [&](std::size_t a, std::size_t b, Vertex i, Vertex j,
                                   const Face& common) {
    const Face& sigma = faces[a];
    double value = fw.at(k, b) / weight_of(common);
    if (std::binary_search(nbrs[a].begin(), nbrs[a].end(), j)) {
      scratch = sigma;
      scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), j), j);
      value -= weight_of(scratch) / fw.at(k, a);
    }
    m(a, b) = swap_sign(common, i, j) * value;
  });
  return m;
}

Matrix k_laplacian_from_coboundaries(const SimplicialComplex& x, const FaceWeights& fw, int k) {
  check_dimension(x, k, "k_laplacian_from_coboundaries");
  const std::size_t fk = x.face_count(k);
  check_dense_dims(fk, fk, "k_laplacian_from_coboundaries");

  auto weights = [&](int dim) {
    std::vector<double> out(x.face_count(dim));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fw.at(dim, i);
    return out;
  };
  // W_a^{-1} d^T W_b for d : C^a -> C^b.
  auto adjoint = [](const Matrix& d, const std::vector<double>& wa, const std::vector<double>& wb) {
    Matrix t = d.transposed();
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) *= wb[c] / wa[r];
    return t;
  };

  const auto w_lower = weights(k - 1);
  const auto w_mid = weights(k);
  const auto w_upper = weights(k + 1);
  const Matrix d_up = coboundary(x, k);
  const Matrix d_down = coboundary(x, k - 1);
  Matrix up = adjoint(d_up, w_mid, w_upper) * d_up;
  Matrix down = d_down * adjoint(d_down, w_lower, w_mid);
  if (fk == 0) return Matrix(0, 0);
  return up + down;
}

}  // namespace indlap
