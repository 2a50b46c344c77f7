#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pawbar::linalg {

/// Dense row-major real matrix. Small sizes only (the measure classes here
/// use d <= a few dozen), so storage is a plain vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

double frobenius_norm(const Matrix& m) noexcept;
double trace(const Matrix& m) noexcept;

/// Symmetry test with tolerance 1e-12 * (1 + |m(p,q)|) per entry.
bool is_symmetric(const Matrix& m) noexcept;

/// (m + m^T) / 2
Matrix symmetrize(const Matrix& m);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // non-decreasing
  Matrix eigenvectors;              // columns, orthogonal
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
/// Throws NotSymmetric, or DidNotConverge after 100 sweeps.
SpectralDecomposition sym_eig(const Matrix& s);

/// V * diag(f(w)) * V^T
Matrix spectral_reconstruct(const SpectralDecomposition& eig, std::span<const double> values);

/// Principal square root of a numerically PSD matrix. Eigenvalues in
/// [-1e-10 * |S|_F, 0) are clamped to zero; anything more negative is NotPSD.
Matrix sqrt_spd(const Matrix& s);

/// S^{-1/2} for strictly PD S (smallest eigenvalue > 1e-12 * largest), else Singular.
Matrix inv_sqrt_spd(const Matrix& s);

/// (Si Sj)^{1/2} via Si^{1/2} (Si^{1/2} Sj Si^{1/2})^{1/2} Si^{-1/2}.
/// Generally not symmetric; its transpose is (Sj Si)^{1/2}.
Matrix cross_sqrt(const Matrix& si, const Matrix& sj);

/// Smallest and largest eigenvalue; used for PD checks.
struct EigenRange {
  double min;
  double max;
};
EigenRange eigen_range(const Matrix& s);

}  // namespace pawbar::linalg
