#include <gtest/gtest.h>

#include <random>

#include "apolar/error.hpp"
#include "apolar/exactla.hpp"

namespace apolar {
namespace {

// Laplace expansion along the first row; fine for the small sizes used here.
Rational cofactor_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    QMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t k = 0;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, k++) = m(r, cc);
      }
    }
    const Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Rational(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  }
  return m;
}

TEST(ExactLA, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const QMatrix m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 5);
    EXPECT_EQ(det(m), cofactor_det(m)) << m.to_string();
  }
}

TEST(ExactLA, RankAgreesWithDeterminantOnSquareMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const QMatrix m = random_matrix(rng, n, n, 1);
    EXPECT_EQ(rank(m) == n, cofactor_det(m) != 0);
  }
}

TEST(ExactLA, KnownValues) {
  const QMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(det(m), -2);
  EXPECT_EQ(rank(m), 2u);
  const QMatrix singular{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(det(singular), 0);
  EXPECT_EQ(rank(singular), 2u);
  EXPECT_EQ(det(QMatrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}), Rational(1, 3));
}

TEST(ExactLA, DeterminantRejectsNonSquare) { EXPECT_THROW(det(QMatrix(2, 3)), NonSquare); }

TEST(ExactLA, RrefIsIdempotentAndPreservesRowSpace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix m = random_matrix(rng, 4, 6, 2);
    const Echelon e = rref(m);
    EXPECT_EQ(rref(e.form).form, e.form);
    EXPECT_EQ(e.pivots.size(), rank(m));
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(in_row_space(e, m.row(r)));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) EXPECT_EQ(e.form(k, e.pivots[k]), 1);
  }
}

TEST(ExactLA, KernelBasisIsAnnihilatedAndHasCorrectDimension) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix m = random_matrix(rng, 3 + trial % 2, 6, 1);
    const QMatrix k = kernel_basis(m);
    EXPECT_EQ(k.rows(), m.cols() - rank(m));
    for (std::size_t r = 0; r < k.rows(); ++r) {
      for (const auto& v : apply(m, k.row(r))) EXPECT_EQ(v, 0);
    }
    EXPECT_EQ(rank(k), k.rows());
  }
}

TEST(ExactLA, ProductAndTranspose) {
  const QMatrix a{{1, 2, 3}, {4, 5, 6}};
  const QMatrix b = a.transpose();
  const QMatrix p = a * b;
  EXPECT_EQ(p, (QMatrix{{14, 32}, {32, 77}}));
  EXPECT_EQ(QMatrix::identity(2) * p, p);
  EXPECT_EQ(vstack(a, a).rows(), 4u);
  EXPECT_EQ(row_space_basis(vstack(a, a)).rows(), 2u);
}

}  // namespace
}  // namespace apolar
