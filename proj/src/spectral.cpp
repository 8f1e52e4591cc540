#include "indlap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "indlap/errors.hpp"

namespace indlap {

Spectrum::Spectrum(std::vector<double> values, double scale)
    : values_(std::move(values)), scale_(scale) {
  std::sort(values_.begin(), values_.end());
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(j, i);
  return std::sqrt(s);
}

// Zeroes a(p,q) with a plane rotation applied from both sides.
void rotate(Matrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double np = c * arp - s * arq;
    const double nq = s * arp + c * arq;
    a(r, p) = np;
    a(p, r) = np;
    a(r, q) = nq;
    a(q, r) = nq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace

Spectrum sym_eigenvalues(const SymMatrix& m, const JacobiOptions& opts) {
  Matrix a = m.matrix();
  const std::size_t n = a.rows();
  const double scale = a.inf_norm();
  const double target = opts.tolerance * a.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Entries below the rounding level of both diagonals are dropped outright.
        const double tiny = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + tiny == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + tiny == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, p, q);
      }
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge in " << opts.max_sweeps << " sweeps (n = " << n
        << ")";
    throw NumericError(msg.str());
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return Spectrum(std::move(values), scale);
}

SymMatrix symmetrize_similar(const Matrix& m) {
  if (!m.is_square()) throw InputError("symmetrize_similar: matrix must be square");
  const std::size_t n = m.rows();
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      const double prod = a * b;
      if (prod < 0.0) {
        std::ostringstream msg;
        msg << "symmetrize_similar: entries (" << i << "," << j << ") and (" << j << "," << i
            << ") have opposite signs";
        throw InputError(msg.str());
      }
      const double sign = (a < 0.0 || b < 0.0) ? -1.0 : 1.0;
      const double v = sign * std::sqrt(prod);
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return SymMatrix(std::move(s));
}

Spectrum nonsym_eigenvalues_real(const Matrix& m) { return sym_eigenvalues(symmetrize_similar(m)); }

double kernel_tolerance(const Spectrum& s) noexcept {
  const double dim = std::max<double>(static_cast<double>(s.source_dim()), 16.0);
  return dim * 0x1.0p-52 * std::max(1.0, s.scale()) * 64.0;
}

std::size_t kernel_dimension(const Spectrum& s) noexcept {
  const double tol = kernel_tolerance(s);
  return static_cast<std::size_t>(std::count_if(s.values().begin(), s.values().end(),
                                                [tol](double v) { return std::abs(v) <= tol; }));
}

double gershgorin_bound(const Matrix& m) {
  if (!m.is_square()) throw InputError("gershgorin_bound: matrix must be square");
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace indlap
