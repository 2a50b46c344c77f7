#include "pawbar/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "pawbar/error.hpp"

namespace pawbar::linalg {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;
constexpr double kNegativeClamp = 1e-10;
constexpr double kSingularRatio = 1e-12;

void require_square(const Matrix& m, const char* what) {
  if (!m.square()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) sum += a(p, q) * a(p, q);
  return std::sqrt(sum);
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    assert(r.size() == cols_ && "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  assert(a.cols() == x.size());
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
  }
  return y;
}

double frobenius_norm(const Matrix& m) noexcept {
  double sum = 0.0;
  for (double v : m.data()) sum += v * v;
  return std::sqrt(sum);
}

double trace(const Matrix& m) noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool is_symmetric(const Matrix& m) noexcept {
  if (!m.square()) return false;
  for (std::size_t p = 0; p < m.rows(); ++p)
    for (std::size_t q = p + 1; q < m.cols(); ++q)
      if (std::abs(m(p, q) - m(q, p)) > 1e-12 * (1.0 + std::abs(m(p, q)))) return false;
  return true;
}

Matrix symmetrize(const Matrix& m) {
  Matrix s(m.rows(), m.cols());
  for (std::size_t p = 0; p < m.rows(); ++p)
    for (std::size_t q = 0; q < m.cols(); ++q) s(p, q) = 0.5 * (m(p, q) + m(q, p));
  return s;
}

SpectralDecomposition sym_eig(const Matrix& s) {
  require_square(s, "sym_eig");
  if (!is_symmetric(s)) throw Error(ErrorCode::NotSymmetric, "sym_eig input is not symmetric");

  const std::size_t n = s.rows();
  Matrix a = symmetrize(s);
  Matrix v = Matrix::identity(n);
  const double tol = kOffDiagonalTol * frobenius_norm(s);

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen so that the (p,q) entry vanishes; |t| <= 1.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > tol) {
    throw Error(ErrorCode::DidNotConverge,
                "Jacobi iteration exceeded " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SpectralDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

Matrix spectral_reconstruct(const SpectralDecomposition& eig, std::span<const double> values) {
  const auto& v = eig.eigenvectors;
  const std::size_t n = v.rows();
  assert(values.size() == n);
  Matrix out(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += v(p, k) * values[k] * v(q, k);
      out(p, q) = sum;
      out(q, p) = sum;
    }
  }
  return out;
}

Matrix sqrt_spd(const Matrix& s) {
  auto eig = sym_eig(s);
  const double floor = -kNegativeClamp * frobenius_norm(s);
  std::vector<double> roots(eig.eigenvalues.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double w = eig.eigenvalues[k];
    if (w < floor) {
      throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(w) + " is significantly negative");
    }
    roots[k] = w > 0.0 ? std::sqrt(w) : 0.0;
  }
  return spectral_reconstruct(eig, roots);
}

Matrix inv_sqrt_spd(const Matrix& s) {
  auto eig = sym_eig(s);
  const std::size_t n = eig.eigenvalues.size();
  if (n == 0) return Matrix{};
  const double largest = eig.eigenvalues.back();
  const double smallest = eig.eigenvalues.front();
  if (!(largest > 0.0) || !(smallest > kSingularRatio * largest)) {
    throw Error(ErrorCode::Singular, "matrix is not strictly positive definite (eigenvalues in [" +
                                         std::to_string(smallest) + ", " +
                                         std::to_string(largest) + "])");
  }
  std::vector<double> inv_roots(n);
  for (std::size_t k = 0; k < n; ++k) inv_roots[k] = 1.0 / std::sqrt(eig.eigenvalues[k]);
  return spectral_reconstruct(eig, inv_roots);
}

Matrix cross_sqrt(const Matrix& si, const Matrix& sj) {
  require_square(si, "cross_sqrt");
  require_square(sj, "cross_sqrt");
  if (si.rows() != sj.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cross_sqrt operands differ in dimension");
  }
  const Matrix root = sqrt_spd(si);
  const Matrix inv_root = inv_sqrt_spd(si);
  const Matrix inner = sqrt_spd(symmetrize(root * sj * root));
  return root * inner * inv_root;
}

EigenRange eigen_range(const Matrix& s) {
  const auto eig = sym_eig(s);
  if (eig.eigenvalues.empty()) return {0.0, 0.0};
  return {eig.eigenvalues.front(), eig.eigenvalues.back()};
}

}  // namespace pawbar::linalg
