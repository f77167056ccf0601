#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "clifford.hpp"
#include "error.hpp"

using namespace spinbound;

// ============================================================================
// generators
// ============================================================================

TEST(Clifford, SpinorDimension) {
  EXPECT_EQ(CliffordAlgebra::build(4).spinor_dim(), 4);
  EXPECT_EQ(CliffordAlgebra::build(5).spinor_dim(), 4);
  EXPECT_EQ(CliffordAlgebra::build(6).spinor_dim(), 8);
  EXPECT_EQ(CliffordAlgebra::build(7).spinor_dim(), 8);
  EXPECT_EQ(CliffordAlgebra::build(8).spinor_dim(), 16);
}

TEST(Clifford, RejectsUnsupportedDimension) {
  EXPECT_THROW(CliffordAlgebra::build(3), Error);
  EXPECT_THROW(CliffordAlgebra::build(9), Error);
}

TEST(Clifford, AnticommutationRelations) {
  for (int n = 4; n <= 8; ++n) {
    auto alg = CliffordAlgebra::build(n);
    CMatrix I = alg.identity();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CMatrix ac = alg.gamma(i) * alg.gamma(j) + alg.gamma(j) * alg.gamma(i);
        CMatrix expect = (i == j ? -2.0 : 0.0) * I;
        EXPECT_LT((ac - expect).norm(), 1e-15) << n << " " << i << " " << j;
      }
  }
}

TEST(Clifford, GammasAreAntiHermitianWithUnitEntries) {
  for (int n = 4; n <= 8; ++n) {
    auto alg = CliffordAlgebra::build(n);
    for (int i = 0; i < n; ++i) {
      const CMatrix& g = alg.gamma(i);
      EXPECT_LT((g.adjoint() + g).norm(), 1e-15);
      for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) {
          double a = std::abs(g(r, c));
          EXPECT_TRUE(a == 0.0 || a == 1.0);
        }
    }
  }
}

TEST(Clifford, ChiralityIsDiagonalInvolution) {
  for (int n : {4, 6, 8}) {
    auto alg = CliffordAlgebra::build(n);
    const CMatrix& w = alg.chirality();
    EXPECT_LT((w * w - alg.identity()).norm(), 1e-14);
    EXPECT_LT((w - CMatrix(w.diagonal().asDiagonal())).norm(), 1e-15);
    EXPECT_NEAR(w.trace().real(), 0.0, 1e-14);
    for (int i = 0; i < n; ++i)
      EXPECT_LT((w * alg.gamma(i) + alg.gamma(i) * w).norm(), 1e-14);
  }
  EXPECT_FALSE(CliffordAlgebra::build(5).has_chirality());
}

TEST(Clifford, VectorMultiplicationSquaresToMinusNorm) {
  auto alg = CliffordAlgebra::build(6);
  Eigen::VectorXd v(6);
  v << 0.3, -1.2, 0.5, 2.0, -0.1, 0.7;
  CMatrix X = alg.vector_mult(v);
  EXPECT_LT((X * X + v.squaredNorm() * alg.identity()).norm(), 1e-13);
}

// ============================================================================
// grading
// ============================================================================

TEST(Grading, MonomialsLandInTheirDegree) {
  auto alg = CliffordAlgebra::build(6);
  std::array<int, 2> two{1, 4};
  std::array<int, 4> four{0, 2, 3, 5};
  CMatrix m2 = alg.monomial(two), m4 = alg.monomial(four);
  EXPECT_LT((alg.grade_project(m2, 2) - m2).norm(), 1e-14);
  EXPECT_LT(alg.grade_project(m2, 0).norm(), 1e-14);
  EXPECT_LT(alg.grade_project(m2, 4).norm(), 1e-14);
  EXPECT_LT((alg.grade_project(m4, 4) - m4).norm(), 1e-14);
  EXPECT_LT(alg.grade_project(m4, 2).norm(), 1e-14);
  CMatrix I = alg.identity();
  EXPECT_LT((alg.grade_project(I, 0) - I).norm(), 1e-14);
}

TEST(Grading, ProjectionIsLinear) {
  auto alg = CliffordAlgebra::build(5);
  std::array<int, 2> a{0, 3};
  std::array<int, 4> b{0, 1, 2, 4};
  CMatrix sum = 2.0 * alg.identity() + Complex(0, 3) * alg.monomial(a) - 0.5 * alg.monomial(b);
  EXPECT_LT((alg.grade_project(sum, 0) - 2.0 * alg.identity()).norm(), 1e-14);
  EXPECT_LT((alg.grade_project(sum, 2) - Complex(0, 3) * alg.monomial(a)).norm(), 1e-14);
  EXPECT_LT((alg.grade_project(sum, 4) + 0.5 * alg.monomial(b)).norm(), 1e-14);
}

TEST(Grading, RejectsOddDegree) {
  auto alg = CliffordAlgebra::build(4);
  EXPECT_THROW(alg.grade_project(alg.identity(), 3), Error);
}

// ============================================================================
// chirality blocks
// ============================================================================

TEST(ChiralitySplit, EvenElementSplits) {
  auto alg = CliffordAlgebra::build(4);
  std::array<int, 2> p{0, 1};
  CMatrix e = alg.monomial(p);
  auto blocks = alg.chirality_split(e);
  ASSERT_EQ(blocks.plus.rows(), 2);
  ASSERT_EQ(blocks.minus.rows(), 2);
  EXPECT_NEAR((blocks.plus.trace() + blocks.minus.trace() - e.trace()).real(), 0.0, 1e-14);
  EXPECT_NEAR(blocks.plus.squaredNorm() + blocks.minus.squaredNorm(), e.squaredNorm(), 1e-13);
}

TEST(ChiralitySplit, RejectsOddElementAndOddDimension) {
  auto alg = CliffordAlgebra::build(4);
  EXPECT_THROW(alg.chirality_split(alg.gamma(0)), Error);
  auto odd = CliffordAlgebra::build(5);
  EXPECT_THROW(odd.chirality_split(odd.identity()), Error);
}
