#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "indlap/matrix.hpp"

namespace indlap {

/// Eigenvalues sorted ascending, with the size and infinity norm of the source matrix.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values`.
  Spectrum(std::vector<double> values, double scale);

  std::size_t size() const noexcept { return values_.size(); }
  std::size_t source_dim() const noexcept { return values_.size(); }
  double scale() const noexcept { return scale_; }
  std::span<const double> values() const noexcept { return values_; }
  /// i-th smallest, 1-based.
  double smallest(std::size_t i) const { return values_.at(i - 1); }
  /// i-th largest, 1-based.
  double largest(std::size_t i) const { return values_.at(values_.size() - i); }

 private:
  std::vector<double> values_;
  double scale_ = 0.0;
};

struct JacobiOptions {
  int max_sweeps = 30;
  /// Converged once the off-diagonal Frobenius norm drops below tolerance * ||M||_F.
  double tolerance = 1e-13;
};

/// Cyclic Jacobi eigenvalues. Throws NumericError if the sweep cap is reached.
Spectrum sym_eigenvalues(const SymMatrix& m, const JacobiOptions& opts = {});

/// Eigenvalues of a matrix that is diagonally similar (or a limit of diagonally similar
/// matrices) to a symmetric one, such as the vertex-weighted Laplacians. The symmetric
/// counterpart takes sign(m_ij) * sqrt(m_ij * m_ji) off the diagonal. Throws InputError if some
/// m_ij * m_ji < 0.
Spectrum nonsym_eigenvalues_real(const Matrix& m);

/// The symmetric matrix used by nonsym_eigenvalues_real.
SymMatrix symmetrize_similar(const Matrix& m);

/// Zero threshold: max(dim, 16) * 2^-52 * max(1, scale) * 64.
double kernel_tolerance(const Spectrum& s) noexcept;
std::size_t kernel_dimension(const Spectrum& s) noexcept;

/// Maximum absolute column sum; bounds every eigenvalue modulus.
double gershgorin_bound(const Matrix& m);

}  // namespace indlap
