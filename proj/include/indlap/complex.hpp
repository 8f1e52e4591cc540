#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "indlap/graph.hpp"
#include "indlap/matrix.hpp"

namespace indlap {

/// Strictly increasing vertex tuple; a face of dimension k has k + 1 vertices.
using Face = std::vector<Vertex>;

inline constexpr int kDefaultMaxDim = 6;
inline constexpr std::size_t kDefaultFaceCap = 2'000'000;

/// Flag complex faces grouped by dimension, each dimension sorted lexicographically.
///
/// Faces are stored for dimensions 0..max_dim. The complex is `complete()` when no face of
/// dimension max_dim + 1 exists, in which case every dimension above max_dim is known to be
/// empty. The empty face (dimension -1) is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int vertex_count() const noexcept { return n_; }
  int max_dim() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  bool complete() const noexcept { return complete_; }
  /// True if faces of dimension k are known (k >= -1 and either stored or provably absent).
  bool knows_dim(int k) const noexcept { return k >= -1 && (k <= max_dim() || complete_); }

  /// f_k; f_{-1} = 1. Throws InputError if dimension k is beyond the enumeration cap.
  std::size_t face_count(int k) const;
  /// Faces of dimension k >= 0 (empty span above a complete complex's stored range).
  std::span<const Face> faces(int k) const;
  /// Position of `face` within its dimension, if it is a stored face.
  std::optional<std::size_t> index_of(std::span<const Vertex> face) const;
  bool contains(std::span<const Vertex> face) const { return index_of(face).has_value(); }
  /// Highest dimension with at least one stored face; -1 if there are no vertices.
  int top_dim() const noexcept;
  /// f_0, f_1, ..., f_top.
  std::vector<std::size_t> f_vector() const;

 private:
  friend SimplicialComplex clique_complex(const Graph&, int, std::size_t);

  int n_ = 0;
  bool complete_ = false;
  std::vector<std::vector<Face>> faces_;
};

/// Cliques of g, up to dimension max_dim. Throws ResourceError naming the dimension when the
/// total face count would exceed face_cap.
SimplicialComplex clique_complex(const Graph& g, int max_dim = kDefaultMaxDim,
                                 std::size_t face_cap = kDefaultFaceCap);

/// Independent sets of g: the clique complex of the complement.
SimplicialComplex independence_complex(const Graph& g, int max_dim = kDefaultMaxDim,
                                       std::size_t face_cap = kDefaultFaceCap);

/// N_X(sigma): vertices v not in sigma with sigma + v a face. sigma may be empty.
std::vector<Vertex> simplex_neighbors(const SimplicialComplex& x, std::span<const Vertex> sigma);

/// N_X(sigma) for every k-face sigma, in face order. Needs dimension k + 1 to be known.
std::vector<std::vector<Vertex>> all_simplex_neighbors(const SimplicialComplex& x, int k);

/// k-th coboundary as an f_{k+1} x f_k matrix over {-1, 0, 1}. The column of sigma has
/// (-1)^p in the row of tau = sigma + j, where p is the position of j in sorted tau.
Matrix coboundary(const SimplicialComplex& x, int k);

}  // namespace indlap
