#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "indlap/complex.hpp"
#include "indlap/matrix.hpp"
#include "indlap/spectral.hpp"

namespace indlap {

/// Hard cap on any exhaustive k-subset enumeration.
inline constexpr std::uint64_t kMaxSubsetEnumeration = 5'000'000;

/// C(n, k), saturating at UINT64_MAX; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k) noexcept;

/// Throws ResourceError if C(n, k) exceeds kMaxSubsetEnumeration.
void check_subset_enumeration(int n, int k, const char* what);

/// Lexicographic ranking of the k-subsets of {0, ..., n-1}.
///
/// rank(c) = C(n,k) - 1 - sum_i C(n - 1 - c_i, k - i), the combinatorial number system
/// applied to the reflected subset.
class SubsetIndex {
 public:
  SubsetIndex(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t count() const noexcept { return count_; }
  /// `subset` must be strictly increasing with entries in range.
  std::size_t rank(std::span<const Vertex> subset) const noexcept;
  Face unrank(std::size_t r) const;
  /// All k-subsets in lexicographic order.
  std::vector<Face> subsets() const;

 private:
  int n_;
  int k_;
  std::size_t count_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// (-1) raised to the number of elements of `common` strictly between i and j.
int swap_sign(std::span<const Vertex> common, Vertex i, Vertex j) noexcept;

/// Sign for two k-subsets differing in one element. Throws InputError unless
/// |sigma| = |tau| and |sigma ∩ tau| = |sigma| - 1.
int epsilon_sign(std::span<const Vertex> sigma, std::span<const Vertex> tau);

/// k-th additive compound in lexicographic k-subset order. Requires 1 <= k <= n.
Matrix additive_compound(const Matrix& m, int k);
SymMatrix additive_compound(const SymMatrix& m, int k);

/// Principal submatrix of the |subsets[0]|-th additive compound, restricted to `subsets` in the
/// given order. Entries follow additive_compound exactly.
Matrix compound_principal_submatrix(const Matrix& m, std::span<const Face> subsets);

/// All sums of k eigenvalues, sorted ascending, duplicates kept.
class KSumSpectrum {
 public:
  KSumSpectrum() = default;
  KSumSpectrum(int k, std::vector<double> values);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  /// nu_{k,i}: i-th smallest sum, 1-based.
  double smallest(std::size_t i) const { return values_.at(i - 1); }
  /// mu_{k,i}: i-th largest sum, 1-based.
  double largest(std::size_t i) const { return values_.at(values_.size() - i); }

 private:
  int k_ = 0;
  std::vector<double> values_;
};

/// Requires 1 <= k <= n and C(n, k) within kMaxSubsetEnumeration.
KSumSpectrum k_sum_spectrum(const Spectrum& spec, int k);

}  // namespace indlap
