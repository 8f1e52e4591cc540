#pragma once

#include <cstddef>
#include <vector>

#include "indlap/complex.hpp"
#include "indlap/graph.hpp"
#include "indlap/matrix.hpp"

namespace indlap {

/// Positive weight per stored face, aligned with the complex's face order. The empty face has
/// weight 1.
class FaceWeights {
 public:
  /// by_dim[k][i] is the weight of x.faces(k)[i]. Throws InputError on a size mismatch or a
  /// non-positive entry.
  FaceWeights(const SimplicialComplex& x, std::vector<std::vector<double>> by_dim);
  static FaceWeights constant(const SimplicialComplex& x, double value = 1.0);

  /// Weight of face index i in dimension k; k = -1 gives the empty face.
  double at(int k, std::size_t i) const;
  int max_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

 private:
  std::vector<std::vector<double>> by_dim_;
};

/// w(sigma) = product of vertex weights. Requires w > 0.
FaceWeights extend_vertex_weights(const SimplicialComplex& x, const WeightFunction& w);

/// Vertex-weighted k-Laplacian, entry by entry:
///   (sigma, sigma) = sum_{u in N_X(sigma)} w(u) + sum_{v in sigma} w(v)
///   (sigma, tau)   = (-1)^eps w(v)  if |sigma ∩ tau| = k, tau \ sigma = {v}, sigma ∪ tau not a face
/// Accepts w >= 0. Needs dimension k + 1 of the complex to be known.
Matrix vertex_weighted_k_laplacian(const SimplicialComplex& x, const WeightFunction& w, int k);

/// Same pattern with off-diagonal (-1)^eps sqrt(w(u) w(v)), {u} = sigma \ tau.
SymMatrix sym_vertex_weighted_k_laplacian(const SimplicialComplex& x, const WeightFunction& w,
                                          int k);

/// General face-weighted k-Laplacian from its explicit four-case entry formula.
Matrix horak_jost_k_laplacian(const SimplicialComplex& x, const FaceWeights& fw, int k);

/// d_k^* d_k + d_{k-1} d_{k-1}^*, with d^* = W_k^{-1} d^T W_{k+1} the adjoint under
/// <e_sigma, e_sigma> = w(sigma).
Matrix k_laplacian_from_coboundaries(const SimplicialComplex& x, const FaceWeights& fw, int k);

}  // namespace indlap
