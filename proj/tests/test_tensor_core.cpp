#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "catalog.hpp"
#include "error.hpp"
#include "jacobi.hpp"
#include "tensor_core.hpp"

using namespace spinbound;

namespace {

double max_diff(const Tensor4& a, const Tensor4& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

Tensor4 sphere_comp(int n, double c) {
  Tensor4 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        t(i, j, i, j) = c;
        t(i, j, j, i) = -c;
      }
  return t;
}

}  // namespace

// ============================================================================
// validation
// ============================================================================

TEST(TensorCoreValidation, AcceptsSphere) {
  for (int n = 4; n <= 8; ++n) EXPECT_NO_THROW(validate_riemann(sphere_comp(n, 1.5)));
}

TEST(TensorCoreValidation, RejectsBrokenAntisymmetry) {
  Tensor4 t = sphere_comp(4, 1.0);
  t(0, 1, 2, 3) = 0.5;
  try {
    validate_riemann(t);
    FAIL() << "expected a validation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
  }
}

TEST(TensorCoreValidation, RejectsBianchiViolation) {
  // all pair symmetries hold, but the cyclic sum does not vanish
  Tensor4 t(4);
  auto put = [&](int i, int j, int k, int l, double v) {
    t(i, j, k, l) = v;
    t(j, i, k, l) = -v;
    t(i, j, l, k) = -v;
    t(j, i, l, k) = v;
    t(k, l, i, j) = v;
    t(l, k, i, j) = -v;
    t(k, l, j, i) = -v;
    t(l, k, j, i) = v;
  };
  put(0, 1, 2, 3, 1.0);
  SymmetryResiduals r = symmetry_residuals(t);
  EXPECT_LT(r.antisymmetry, 1e-15);
  EXPECT_LT(r.pair_symmetry, 1e-15);
  EXPECT_GT(r.bianchi, 0.5);
  EXPECT_THROW(validate_riemann(t), Error);
}

TEST(TensorCoreValidation, RejectsLowDimension) {
  try {
    validate_riemann(sphere_comp(3, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(TensorCoreValidation, RandomTensorsSatisfySymmetries) {
  for (int n = 4; n <= 8; ++n) {
    RiemannTensor K = random_curvature(n, 100 + n);
    SymmetryResiduals r = symmetry_residuals(K.components());
    EXPECT_LT(r.antisymmetry, 1e-14);
    EXPECT_LT(r.pair_symmetry, 1e-14);
    EXPECT_LT(r.bianchi, 1e-13);
  }
}

// ============================================================================
// decomposition
// ============================================================================

TEST(Decomposition, SphereRicciAndScalar) {
  for (int n = 4; n <= 8; ++n) {
    auto d = decompose(validate_riemann(sphere_comp(n, 2.0)));
    EXPECT_NEAR(d.scalar, 2.0 * n * (n - 1), 1e-12);
    EXPECT_LT((d.ricci - 2.0 * (n - 1) * Eigen::MatrixXd::Identity(n, n)).norm(), 1e-12);
    EXPECT_LT(d.weyl.components().max_abs(), 1e-14);
    EXPECT_LT(d.ricci_deviation_sq, 1e-24);
  }
}

TEST(Decomposition, ReconstructionRoundTrip) {
  for (int n = 4; n <= 8; ++n)
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      RiemannTensor K = random_curvature(n, seed * 31 + n);
      auto d = decompose(K);
      EXPECT_LT(max_diff(reconstruct(d), K.components()), 1e-12) << "n=" << n;
    }
}

TEST(Decomposition, WeylIsTotallyTraceFree) {
  for (int n = 4; n <= 7; ++n) {
    auto d = decompose(random_curvature(n, 7 + n));
    Eigen::MatrixXd tr = ricci_of(d.weyl.components());
    EXPECT_LT(tr.cwiseAbs().maxCoeff(), 1e-13);
    SymmetryResiduals r = symmetry_residuals(d.weyl.components());
    EXPECT_LT(r.bianchi, 1e-13);
  }
}

TEST(Decomposition, WeylInvariantUnderConformalPerturbation) {
  // adding h (.) g changes Ricci but not Weyl
  for (int n = 4; n <= 7; ++n) {
    RiemannTensor K = random_curvature(n, 55 + n);
    Eigen::MatrixXd h = Eigen::MatrixXd::Random(n, n);
    h = (0.5 * (h + h.transpose())).eval();
    Tensor4 pert = K.components() + kulkarni_nomizu(h, Eigen::MatrixXd::Identity(n, n));
    auto d0 = decompose(K);
    auto d1 = decompose(validate_riemann(pert));
    EXPECT_LT(max_diff(d0.weyl.components(), d1.weyl.components()), 1e-12);
    EXPECT_GT((d0.ricci - d1.ricci).norm(), 1e-3);
  }
}

TEST(Decomposition, NormsMatchComponents) {
  auto d = decompose(random_curvature(5, 3));
  EXPECT_NEAR(d.weyl_norm_sq, d.weyl.components().norm_sq(), 1e-12);
  Eigen::MatrixXd dev = d.ricci - d.scalar / 5 * Eigen::MatrixXd::Identity(5, 5);
  EXPECT_NEAR(d.ricci_deviation_sq, dev.squaredNorm(), 1e-12);
}

TEST(Decomposition, KulkarniNomizuOfMetricIsTwiceSphere) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  EXPECT_LT(max_diff(kulkarni_nomizu(g, g), sphere_comp(4, 2.0)), 1e-15);
}

// ============================================================================
// curvature operator and frames
// ============================================================================

TEST(CurvatureOperator, ConstantCurvatureEigenvalues) {
  for (int n = 4; n <= 8; ++n) {
    auto op = curvature_operator(validate_riemann(sphere_comp(n, 0.7)));
    ASSERT_EQ(op.mat.rows(), pair_count(n));
    for (double ev : symmetric_eigenvalues(op.mat)) EXPECT_NEAR(ev, 0.7, 1e-13);
  }
}

TEST(CurvatureOperator, PairIndexIsDense) {
  int n = 6, expect = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) EXPECT_EQ(pair_index(n, i, j), expect++);
  EXPECT_EQ(expect, pair_count(n));
}

TEST(CurvatureOperator, FubiniStudySpectrum) {
  // holomorphic sectional curvature 4 on CP^3: eigenvalues 8, 2 (x8), 0 (x6)
  auto e = fubini_study(3, 4.0);
  auto ev = symmetric_eigenvalues(curvature_operator(e.samples[0]).mat);
  ASSERT_EQ(ev.size(), 15u);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(ev[k], 0.0, 1e-12);
  for (int k = 6; k < 14; ++k) EXPECT_NEAR(ev[k], 2.0, 1e-12);
  EXPECT_NEAR(ev[14], 8.0, 1e-12);
}

TEST(FrameChange, PreservesInvariants) {
  for (int n = 4; n <= 7; ++n) {
    RiemannTensor K = random_curvature(n, 900 + n);
    Eigen::MatrixXd O = random_orthogonal(n, 17 + n);
    EXPECT_LT((O * O.transpose() - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-13);
    RiemannTensor K2 = change_frame(K, O);
    auto d = decompose(K), d2 = decompose(K2);
    EXPECT_NEAR(d.scalar, d2.scalar, 1e-11);
    EXPECT_NEAR(d.weyl_norm_sq, d2.weyl_norm_sq, 1e-10);
    EXPECT_NEAR(K.components().norm_sq(), K2.components().norm_sq(), 1e-10);
    auto a = symmetric_eigenvalues(curvature_operator(K).mat);
    auto b = symmetric_eigenvalues(curvature_operator(K2).mat);
    for (size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-11);
    EXPECT_LT(max_diff(change_frame(K2, O.transpose()).components(), K.components()), 1e-12);
  }
}

// ============================================================================
// four dimensions
// ============================================================================

TEST(SelfDual, RandomWeylHasNoCrossBlock) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto W = decompose(random_curvature(4, seed)).weyl;
    auto s = selfdual_split(W);
    EXPECT_LT(s.cross_residual, 1e-13);
    EXPECT_NEAR(s.plus.trace(), 0.0, 1e-13);
    EXPECT_NEAR(s.minus.trace(), 0.0, 1e-13);
  }
}

TEST(SelfDual, HodgeStarSquaresToIdentity) {
  auto W = decompose(random_curvature(4, 4)).weyl;
  Tensor4 twice = hodge_star_left(hodge_star_left(W.components()));
  EXPECT_LT(max_diff(twice, W.components()), 1e-13);
}

TEST(SelfDual, NormSplitsIntoBlocks) {
  auto W = decompose(random_curvature(4, 12)).weyl;
  auto s = selfdual_split(W);
  // four-index sum = 4 |W|_{Lambda^2}^2 = 4 (|W+|^2 + |W-|^2)
  EXPECT_NEAR(W.components().norm_sq(), 4.0 * (s.plus.squaredNorm() + s.minus.squaredNorm()), 1e-11);
  EXPECT_NEAR(selfdual_norm_sq(W, +1), 4.0 * s.plus.squaredNorm(), 1e-11);
  EXPECT_NEAR(selfdual_norm_sq(W, -1), 4.0 * s.minus.squaredNorm(), 1e-11);
}

TEST(SelfDual, ProductOfSpheresHasDegenerateSelfDualWeyl) {
  // S^2 x S^2, r = 1: R = 4, W+ and W- each with eigenvalues (-R/12, -R/12, R/6)
  auto e = product_spheres(1.0, 1.0);
  auto d = decompose(e.samples[0]);
  ASSERT_NEAR(d.scalar, 4.0, 1e-14);
  auto s = selfdual_split(d.weyl);
  for (const Eigen::Matrix3d& m : {s.plus, s.minus}) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    EXPECT_NEAR(es.eigenvalues()(0), -1.0 / 3.0, 1e-13);
    EXPECT_NEAR(es.eigenvalues()(1), -1.0 / 3.0, 1e-13);
    EXPECT_NEAR(es.eigenvalues()(2), 2.0 / 3.0, 1e-13);
  }
}

TEST(SelfDual, SelfDualBasisIsOrthonormal) {
  for (int sign : {+1, -1}) {
    auto b = selfdual_basis(sign);
    EXPECT_LT((b.transpose() * b - Eigen::Matrix3d::Identity()).norm(), 1e-15);
  }
  EXPECT_LT((selfdual_basis(1).transpose() * selfdual_basis(-1)).norm(), 1e-15);
}
