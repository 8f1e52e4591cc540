#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace indlap {

/// Largest dimension any dense matrix in the library may take.
inline constexpr std::size_t kMaxDenseDim = 12000;

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;
  /// Maximum absolute row sum.
  double inf_norm() const noexcept;
  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;
  /// Largest |a(i,j) - a(j,i)|; requires a square matrix.
  double asymmetry() const noexcept;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s) noexcept;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix that passed a symmetry check: |a(i,j) - a(j,i)| <= 1e-12 * max(1, max|a|).
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Throws InputError if `m` is not square or not symmetric within tolerance.
  explicit SymMatrix(Matrix m);

  std::size_t size() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

/// Largest entrywise |a - b|; shapes must agree.
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Throws ResourceError when a rows x cols dense allocation exceeds kMaxDenseDim.
void check_dense_dims(std::size_t rows, std::size_t cols, const char* what);

/// Text format: "rows cols" then rows of whitespace-separated values, 17 significant digits.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

}  // namespace indlap
