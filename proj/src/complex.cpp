#include "indlap/complex.hpp"

#include <algorithm>
#include <sstream>

#include "indlap/errors.hpp"

namespace indlap {

namespace {

void require_known(const SimplicialComplex& x, int k, const char* what) {
  if (!x.knows_dim(k)) {
    std::ostringstream msg;
    msg << what << ": dimension " << k << " is outside the enumerated range -1.."
        << x.max_dim() << " (rebuild the complex with a larger max_dim)";
    throw InputError(msg.str());
  }
}

}  // namespace

std::size_t SimplicialComplex::face_count(int k) const {
  require_known(*this, k, "face_count");
  if (k == -1) return 1;
  if (k > max_dim()) return 0;
  return faces_[k].size();
}

std::span<const Face> SimplicialComplex::faces(int k) const {
  if (k < 0) throw InputError("faces: dimension must be >= 0");
  require_known(*this, k, "faces");
  if (k > max_dim()) return {};
  return faces_[k];
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const Vertex> face) const {
  const int k = static_cast<int>(face.size()) - 1;
  if (k < 0 || k > max_dim()) return std::nullopt;
  const auto& level = faces_[k];
  auto it = std::lower_bound(level.begin(), level.end(), face,
                             [](const Face& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                   b.end());
                             });
  if (it == level.end() || !std::equal(it->begin(), it->end(), face.begin(), face.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

int SimplicialComplex::top_dim() const noexcept {
  for (int k = max_dim(); k >= 0; --k)
    if (!faces_[k].empty()) return k;
  return -1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int k = 0; k <= top_dim(); ++k) f.push_back(faces_[k].size());
  return f;
}

SimplicialComplex clique_complex(const Graph& g, int max_dim, std::size_t face_cap) {
  if (max_dim < 0) throw InputError("max_dim must be >= 0");
  SimplicialComplex x;
  x.n_ = g.vertex_count();

  // Each face carries the common neighbors above its largest vertex; extending by those in
  // increasing order keeps every level lexicographically sorted.
  struct Frontier {
    Face face;
    std::vector<Vertex> candidates;
  };
  std::vector<Frontier> level;
  std::size_t total = 0;
  for (Vertex v = 0; v < x.n_; ++v) {
    std::vector<Vertex> above;
    for (Vertex u : g.neighbors(v))
      if (u > v) above.push_back(u);
    level.push_back({Face{v}, std::move(above)});
  }

  for (int k = 0;; ++k) {
    total += level.size();
    if (total > face_cap) {
      std::ostringstream msg;
      msg << "clique enumeration exceeds the cap of " << face_cap << " faces at dimension " << k;
      throw ResourceError(msg.str());
    }
    std::vector<Face> faces;
    faces.reserve(level.size());
    for (const auto& fr : level) faces.push_back(fr.face);
    x.faces_.push_back(std::move(faces));

    if (k == max_dim) {
      x.complete_ = std::all_of(level.begin(), level.end(),
                                [](const Frontier& fr) { return fr.candidates.empty(); });
      break;
    }
    std::vector<Frontier> next;
    for (const auto& fr : level) {
      for (std::size_t a = 0; a < fr.candidates.size(); ++a) {
        const Vertex c = fr.candidates[a];
        Frontier child;
        child.face = fr.face;
        child.face.push_back(c);
        for (std::size_t b = a + 1; b < fr.candidates.size(); ++b)
          if (g.has_edge(c, fr.candidates[b])) child.candidates.push_back(fr.candidates[b]);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return x;
}

SimplicialComplex independence_complex(const Graph& g, int max_dim, std::size_t face_cap) {
  return clique_complex(complement(g), max_dim, face_cap);
}

std::vector<Vertex> simplex_neighbors(const SimplicialComplex& x, std::span<const Vertex> sigma) {
  const int k = static_cast<int>(sigma.size()) - 1;
  if (k >= 0 && !x.contains(sigma)) throw InputError("simplex_neighbors: not a face");
  require_known(x, k + 1, "simplex_neighbors");
  std::vector<Vertex> out;
  Face tau;
  for (Vertex v = 0; v < x.vertex_count(); ++v) {
    if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
    tau.assign(sigma.begin(), sigma.end());
    tau.insert(std::upper_bound(tau.begin(), tau.end(), v), v);
    if (x.contains(tau)) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> all_simplex_neighbors(const SimplicialComplex& x, int k) {
  if (k < 0) throw InputError("all_simplex_neighbors: dimension must be >= 0");
  require_known(x, k + 1, "all_simplex_neighbors");
  std::vector<std::vector<Vertex>> out(x.face_count(k));
  Face facet;
  for (const Face& tau : x.faces(k + 1)) {
    for (std::size_t drop = 0; drop < tau.size(); ++drop) {
      facet.assign(tau.begin(), tau.end());
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
      out[*x.index_of(facet)].push_back(tau[drop]);
    }
  }
  for (auto& nbrs : out) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

Matrix coboundary(const SimplicialComplex& x, int k) {
  if (k < -1) throw InputError("coboundary: k must be >= -1");
  require_known(x, k + 1, "coboundary");
  const std::size_t rows = x.face_count(k + 1);
  const std::size_t cols = x.face_count(k);
  check_dense_dims(rows, cols, "coboundary");
  Matrix d(rows, cols);
  if (k == -1) {
    for (std::size_t r = 0; r < rows; ++r) d(r, 0) = 1.0;
    return d;
  }
  // Row by row: removing position p from tau gives sigma with sign (-1)^p.
  const auto upper = x.faces(k + 1);
  Face sigma;
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const Face& tau = upper[r];
    for (std::size_t p = 0; p < tau.size(); ++p) {
      sigma.assign(tau.begin(), tau.end());
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(p));
      d(r, *x.index_of(sigma)) = (p % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return d;
}

}  // namespace indlap
