#include "pawbar/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pawbar/error.hpp"

namespace pawbar::linalg {
namespace {

using testing::eig2x2;
using testing::max_abs_diff;

double relative_fro(const Matrix& a, const Matrix& b) {
  return frobenius_norm(a - b) / std::max(1.0, frobenius_norm(b));
}

void expect_decomposition_invariants(const Matrix& s, const SpectralDecomposition& eig) {
  const Matrix& v = eig.eigenvectors;
  EXPECT_LE(frobenius_norm(spectral_reconstruct(eig, eig.eigenvalues) - s), 1e-10 * std::max(1.0, frobenius_norm(s)));
  EXPECT_LE(frobenius_norm(v.transpose() * v - Matrix::identity(s.rows())), 1e-10);
  EXPECT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
}

TEST(SymEig, IdentityHasUnitSpectrum) {
  const Matrix id = Matrix::identity(3);
  const auto eig = sym_eig(id);
  for (double w : eig.eigenvalues) EXPECT_DOUBLE_EQ(w, 1.0);
  expect_decomposition_invariants(id, eig);
}

TEST(SymEig, DiagonalIsSortedAscending) {
  const Matrix d{{4.0, 0.0}, {0.0, 1.0}};
  const auto eig = sym_eig(d);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[1], 4.0);
  // Eigenvectors are the axes, swapped.
  EXPECT_NEAR(std::abs(eig.eigenvectors(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(eig.eigenvectors(0, 1)), 1.0, 1e-15);
}

TEST(SymEig, TwoByTwoMatchesCharacteristicPolynomial) {
  const Matrix s{{2.0, 1.0}, {1.0, 2.0}};
  const auto [lo, hi] = eig2x2(2.0, 1.0, 2.0);
  ASSERT_DOUBLE_EQ(lo, 1.0);
  ASSERT_DOUBLE_EQ(hi, 3.0);
  const auto eig = sym_eig(s);
  EXPECT_NEAR(eig.eigenvalues[0], lo, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], hi, 1e-14);
  expect_decomposition_invariants(s, eig);
}

TEST(SymEig, RejectsAsymmetricInput) {
  const Matrix s{{1.0, 2.0}, {0.0, 1.0}};
  try {
    sym_eig(s);
    FAIL() << "expected NotSymmetric";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(SymEig, RandomSymmetricMatricesSatisfyInvariants) {
  RngState rng{11};
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = testing::random_square(n, rng);
      const Matrix s = symmetrize(a + a.transpose());
      expect_decomposition_invariants(s, sym_eig(s));
    }
  }
}

TEST(SqrtSpd, IdentityAndDiagonal) {
  EXPECT_EQ(sqrt_spd(Matrix::identity(2)), Matrix::identity(2));
  const Matrix root = sqrt_spd(Matrix{{4.0, 0.0}, {0.0, 9.0}});
  EXPECT_LE(max_abs_diff(root, Matrix{{2.0, 0.0}, {0.0, 3.0}}), 1e-15);
}

TEST(SqrtSpd, TwoByTwoSpectralMapping) {
  const Matrix s{{2.0, 1.0}, {1.0, 2.0}};
  const Matrix root = sqrt_spd(s);
  // Eigenvectors (1,1)/sqrt2 and (1,-1)/sqrt2 carry eigenvalues sqrt3 and 1.
  const double a = 0.5 * (std::sqrt(3.0) + 1.0);
  const double b = 0.5 * (std::sqrt(3.0) - 1.0);
  EXPECT_LE(max_abs_diff(root, Matrix{{a, b}, {b, a}}), 1e-14);
  const auto [lo, hi] = eig2x2(root(0, 0), root(0, 1), root(1, 1));
  EXPECT_NEAR(lo, 1.0, 1e-14);
  EXPECT_NEAR(hi, std::sqrt(3.0), 1e-14);
}

TEST(SqrtSpd, ClampsRoundOffNegativeEigenvalues) {
  const Matrix s{{1.0, 0.0}, {0.0, -1e-14}};
  const Matrix root = sqrt_spd(s);
  EXPECT_DOUBLE_EQ(root(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(root(1, 1), 0.0);
}

TEST(SqrtSpd, RejectsSignificantlyNegativeEigenvalue) {
  try {
    sqrt_spd(Matrix{{1.0, 0.0}, {0.0, -0.1}});
    FAIL() << "expected NotPSD";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPSD);
  }
}

TEST(SqrtSpd, RandomSpdReconstructs) {
  RngState rng{12};
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix s = scenarios::random_spd(n, rng, 0.1, 10.0);
      const Matrix root = sqrt_spd(s);
      EXPECT_LE(relative_fro(root * root, s), 1e-9);
      EXPECT_TRUE(is_symmetric(root));
    }
  }
}

TEST(InvSqrtSpd, KnownValues) {
  EXPECT_LE(max_abs_diff(inv_sqrt_spd(Matrix::identity(2)), Matrix::identity(2)), 1e-15);
  EXPECT_LE(max_abs_diff(inv_sqrt_spd(Matrix{{4.0, 0.0}, {0.0, 9.0}}), Matrix{{0.5, 0.0}, {0.0, 1.0 / 3.0}}), 1e-15);

  const Matrix r = inv_sqrt_spd(Matrix{{2.0, 1.0}, {1.0, 2.0}});
  const auto [lo, hi] = eig2x2(r(0, 0), r(0, 1), r(1, 1));
  EXPECT_NEAR(lo, 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(hi, 1.0, 1e-14);
  // Same eigenvectors as the input: (1,1) goes with 1/sqrt3.
  EXPECT_NEAR(r(0, 0) + r(0, 1), 1.0 / std::sqrt(3.0), 1e-14);
}

TEST(InvSqrtSpd, RejectsSingular) {
  try {
    inv_sqrt_spd(Matrix{{1.0, 0.0}, {0.0, 0.0}});
    FAIL() << "expected Singular";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
}

TEST(InvSqrtSpd, RandomSpdWhitens) {
  RngState rng{13};
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix s = scenarios::random_spd(n, rng, 0.1, 10.0);
      const Matrix r = inv_sqrt_spd(s);
      EXPECT_LE(frobenius_norm(r * s * r - Matrix::identity(n)), 1e-8);
    }
  }
}

TEST(CrossSqrt, ScalarAndCommutingCases) {
  EXPECT_NEAR(cross_sqrt(Matrix{{4.0}}, Matrix{{4.0}})(0, 0), 4.0, 1e-14);
  const Matrix m = cross_sqrt(Matrix{{1.0, 0.0}, {0.0, 4.0}}, Matrix{{4.0, 0.0}, {0.0, 1.0}});
  EXPECT_LE(max_abs_diff(m, Matrix{{2.0, 0.0}, {0.0, 2.0}}), 1e-14);
}

TEST(CrossSqrt, SquaresToTheProduct) {
  RngState rng{14};
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix si = scenarios::random_spd(3, rng, 0.1, 10.0);
    const Matrix sj = scenarios::random_spd(3, rng, 0.1, 10.0);
    const Matrix m = cross_sqrt(si, sj);
    const Matrix product = si * sj;
    EXPECT_LE(frobenius_norm(m * m - product), 1e-8 * std::max(1.0, frobenius_norm(product)));
    // (Si Sj)^{1/2} and (Sj Si)^{1/2} are transposes of each other.
    EXPECT_LE(frobenius_norm(cross_sqrt(sj, si) - m.transpose()), 1e-9 * std::max(1.0, frobenius_norm(m)));
  }
}

TEST(CrossSqrt, OfAMatrixWithItselfIsTheMatrix) {
  // (S S)^{1/2} = S for SPD S.
  RngState rng{15};
  for (std::size_t n = 1; n <= 8; ++n) {
    const Matrix s = scenarios::random_spd(n, rng, 0.1, 10.0);
    EXPECT_LE(frobenius_norm(cross_sqrt(s, s) - s), 1e-9 * std::max(1.0, frobenius_norm(s)));
  }
}

TEST(CrossSqrt, CommutingPairIsSymmetricAndOrderFree) {
  RngState rng{16};
  for (int trial = 0; trial < 20; ++trial) {
    // Shared eigenbasis, independent spectra.
    const Matrix q = sym_eig(scenarios::random_spd(4, rng)).eigenvectors;
    std::vector<double> wi(4), wj(4);
    for (double& w : wi) w = 0.1 + 9.9 * next_uniform(rng);
    for (double& w : wj) w = 0.1 + 9.9 * next_uniform(rng);
    const Matrix si = symmetrize(q * Matrix::diagonal(wi) * q.transpose());
    const Matrix sj = symmetrize(q * Matrix::diagonal(wj) * q.transpose());
    const Matrix ij = cross_sqrt(si, sj);
    const Matrix ji = cross_sqrt(sj, si);
    EXPECT_LE(frobenius_norm(ij - ij.transpose()), 1e-9 * std::max(1.0, frobenius_norm(ij)));
    EXPECT_LE(frobenius_norm(ij - ji), 1e-9 * std::max(1.0, frobenius_norm(ij)));
  }
}

TEST(FrobeniusNorm, KnownValues) {
  EXPECT_EQ(frobenius_norm(Matrix(3, 3)), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_norm(Matrix::identity(2)), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(frobenius_norm(Matrix{{3.0, 4.0}, {0.0, 0.0}}), 5.0);
}

}  // namespace
}  // namespace pawbar::linalg
