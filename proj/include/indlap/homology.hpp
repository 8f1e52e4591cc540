#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "indlap/complex.hpp"
#include "indlap/graph.hpp"
#include "indlap/matrix.hpp"

namespace indlap {

/// Reduced real Betti numbers beta_0..beta_K.
struct BettiVector {
  enum class Method { rank_oracle, hodge };

  std::vector<std::size_t> values;
  Method method = Method::rank_oracle;
  int cutoff = 0;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

std::string_view to_string(BettiVector::Method m) noexcept;

/// Exact rank over Q. Entries must be integers (checked).
std::size_t exact_rank(const Matrix& m);

/// beta_k = f_k - rank d_k - rank d_{k-1} with exact rational elimination, reduced convention.
/// Needs dimension K + 1 of the complex to be known.
BettiVector betti_rank_oracle(const SimplicialComplex& x, int K);

/// beta_k = kernel dimension of the symmetrized vertex-weighted k-Laplacian. Requires w > 0.
BettiVector betti_hodge(const SimplicialComplex& x, const WeightFunction& w, int K);

struct Connectivity {
  int value = 0;
  /// False when every computed Betti number vanished, so `value` is only a lower bound.
  bool exact = false;
};

/// Largest k <= K + 1 with beta_i = 0 for all i <= k - 2. Throws InputError on an empty complex.
Connectivity homological_connectivity(const SimplicialComplex& x, int K);

}  // namespace indlap
