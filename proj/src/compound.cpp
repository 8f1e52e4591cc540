#include "indlap/compound.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "indlap/errors.hpp"

namespace indlap {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

void check_subset_enumeration(int n, int k, const char* what) {
  if (binomial(n, k) > kMaxSubsetEnumeration) {
    std::ostringstream msg;
    msg << what << ": C(" << n << "," << k << ") subsets exceed the enumeration cap of "
        << kMaxSubsetEnumeration;
    throw ResourceError(msg.str());
  }
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n) throw InputError("SubsetIndex: need 0 <= k <= n");
  check_subset_enumeration(n, k, "SubsetIndex");
  count_ = binomial(n, k);
  binom_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= k; ++b) binom_[a][b] = binomial(a, b);
}

std::size_t SubsetIndex::rank(std::span<const Vertex> subset) const noexcept {
  std::uint64_t acc = 0;
  for (int i = 0; i < k_; ++i) acc += binom_[n_ - 1 - subset[i]][k_ - i];
  return count_ - 1 - acc;
}

Face SubsetIndex::unrank(std::size_t r) const {
  if (r >= count_) throw InputError("SubsetIndex::unrank: rank out of range");
  Face out;
  out.reserve(k_);
  Vertex x = 0;
  for (int i = 0; i < k_; ++i) {
    for (;; ++x) {
      const std::uint64_t starting_here = binom_[n_ - 1 - x][k_ - 1 - i];
      if (r < starting_here) break;
      r -= starting_here;
    }
    out.push_back(x++);
  }
  return out;
}

std::vector<Face> SubsetIndex::subsets() const {
  std::vector<Face> out;
  out.reserve(count_);
  Face c(k_);
  for (int i = 0; i < k_; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k_ - 1;
    while (i >= 0 && c[i] == n_ - k_ + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k_; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

int swap_sign(std::span<const Vertex> common, Vertex i, Vertex j) noexcept {
  const Vertex lo = std::min(i, j);
  const Vertex hi = std::max(i, j);
  const auto first = std::upper_bound(common.begin(), common.end(), lo);
  const auto last = std::lower_bound(common.begin(), common.end(), hi);
  const auto between = first < last ? last - first : 0;
  return between % 2 == 0 ? 1 : -1;
}

namespace {

// For subsets differing in exactly one element, fills i (only in sigma), j (only in tau) and the
// common part; returns false otherwise.
bool single_swap(std::span<const Vertex> sigma, std::span<const Vertex> tau, Vertex& i, Vertex& j,
                 Face& common) {
  if (sigma.size() != tau.size()) return false;
  common.clear();
  std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                        std::back_inserter(common));
  if (common.size() + 1 != sigma.size()) return false;
  for (Vertex v : sigma)
    if (!std::binary_search(common.begin(), common.end(), v)) i = v;
  for (Vertex v : tau)
    if (!std::binary_search(common.begin(), common.end(), v)) j = v;
  return true;
}

}  // namespace

int epsilon_sign(std::span<const Vertex> sigma, std::span<const Vertex> tau) {
  Vertex i = 0;
  Vertex j = 0;
  Face common;
  if (!single_swap(sigma, tau, i, j, common))
    throw InputError("epsilon_sign: subsets must have equal size and differ in one element");
  return swap_sign(common, i, j);
}

Matrix additive_compound(const Matrix& m, int k) {
  if (!m.is_square()) throw InputError("additive_compound: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "additive_compound: k = " << k << " outside 1.." << n;
    throw InputError(msg.str());
  }
  const SubsetIndex index(n, k);
  check_dense_dims(index.count(), index.count(), "additive_compound");
  const auto subsets = index.subsets();
  Matrix out(index.count(), index.count());

  Face common;
  Face tau;
  std::vector<bool> member(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    const Face& sigma = subsets[r];
    std::fill(member.begin(), member.end(), false);
    double diag = 0.0;
    for (Vertex v : sigma) {
      member[v] = true;
      diag += m(v, v);
    }
    out(r, r) = diag;
    for (int p = 0; p < k; ++p) {
      const Vertex i = sigma[p];
      common.assign(sigma.begin(), sigma.end());
      common.erase(common.begin() + p);
      for (Vertex j = 0; j < n; ++j) {
        if (member[j]) continue;
        const double mij = m(i, j);
        if (mij == 0.0) continue;
        tau = common;
        tau.insert(std::upper_bound(tau.begin(), tau.end(), j), j);
        out(r, index.rank(tau)) = swap_sign(common, i, j) * mij;
      }
    }
  }
  return out;
}

SymMatrix additive_compound(const SymMatrix& m, int k) {
  return SymMatrix(additive_compound(m.matrix(), k));
}

Matrix compound_principal_submatrix(const Matrix& m, std::span<const Face> subsets) {
  if (!m.is_square()) throw InputError("compound_principal_submatrix: matrix must be square");
  const std::size_t s = subsets.size();
  check_dense_dims(s, s, "compound_principal_submatrix");
  Matrix out(s, s);
  Face common;
  for (std::size_t a = 0; a < s; ++a) {
    for (Vertex v : subsets[a]) {
      if (v < 0 || static_cast<std::size_t>(v) >= m.rows())
        throw InputError("compound_principal_submatrix: vertex out of range");
      out(a, a) += m(v, v);
    }
    for (std::size_t b = 0; b < s; ++b) {
      Vertex i = 0;
      Vertex j = 0;
      if (a != b && single_swap(subsets[a], subsets[b], i, j, common))
        out(a, b) = swap_sign(common, i, j) * m(i, j);
    }
  }
  return out;
}

KSumSpectrum::KSumSpectrum(int k, std::vector<double> values) : k_(k), values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

KSumSpectrum k_sum_spectrum(const Spectrum& spec, int k) {
  const int n = static_cast<int>(spec.size());
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "k_sum_spectrum: k = " << k << " outside 1.." << n;
    throw InputError(msg.str());
  }
  check_subset_enumeration(n, k, "k_sum_spectrum");
  std::vector<double> sums;
  sums.reserve(binomial(n, k));
  const auto lambda = spec.values();
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    double s = 0.0;
    for (int idx : c) s += lambda[idx];
    sums.push_back(s);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return KSumSpectrum(k, std::move(sums));
}

}  // namespace indlap
