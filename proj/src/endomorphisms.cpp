#include "endomorphisms.hpp"

#include <string>

#include "error.hpp"

namespace spinbound {

PairFamily::PairFamily(int n, int N)
    : n_(n), m_(static_cast<size_t>(n * n), CMatrix::Zero(N, N)) {}

CMatrix PairFamily::evaluate(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  CMatrix out = CMatrix::Zero(m_.front().rows(), m_.front().cols());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const double w = x(i) * y(j);
      if (w != 0.0 && i != j) out += w * (*this)(i, j);
    }
  return out;
}

PairFamily spinor_curvature(const CliffordAlgebra& alg, const Tensor4& T) {
  const int n = alg.dim();
  if (T.dim() != n) {
    throw Error(ErrorCode::kInvalidArgument, "spinor_curvature: dimension mismatch");
  }
  std::vector<CMatrix> gg;  // gamma_k gamma_l for k < l
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) gg.push_back(alg.gamma(k) * alg.gamma(l));

  PairFamily S(n, alg.spinor_dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMatrix& m = S(i, j);
      size_t p = 0;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l, ++p)
          if (T(i, j, k, l) != 0.0) m -= (0.5 * T(i, j, k, l)) * gg[p];
      S(j, i) = -m;
    }
  return S;
}

CMatrix c_endo(const CliffordAlgebra& alg, const RiemannTensor& K, int i, int j) {
  return spinor_curvature(alg, K.components())(i, j);
}

CMatrix b_endo(const CliffordAlgebra& alg, const RiemannTensor& W, int i, int j) {
  return spinor_curvature(alg, W.components())(i, j);
}

CMatrix contracted_product(const PairFamily& S, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) {
  const int n = S.dim();
  CMatrix out = CMatrix::Zero(S(0, 0).rows(), S(0, 0).cols());
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
    out -= S.evaluate(ek, y) * S.evaluate(ek, x);
  }
  return out;
}

CMatrix contracted_product(const PairFamily& S, int x, int y) {
  const int n = S.dim();
  CMatrix out = CMatrix::Zero(S(0, 0).rows(), S(0, 0).cols());
  for (int k = 0; k < n; ++k) out -= S(k, y) * S(k, x);
  return out;
}

CMatrix double_contraction(const PairFamily& S) {
  const int n = S.dim();
  CMatrix out = CMatrix::Zero(S(0, 0).rows(), S(0, 0).cols());
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (k != l) out -= S(k, l) * S(k, l);
  return out;
}

CMatrix f_endo(const CliffordAlgebra& alg, const RiemannTensor& K) {
  return double_contraction(spinor_curvature(alg, K.components()));
}

CMatrix h_endo(const CliffordAlgebra& alg, const RiemannTensor& W) {
  return double_contraction(spinor_curvature(alg, W.components()));
}

HGrading h_grading(const CliffordAlgebra& alg, const CMatrix& H) {
  HGrading g;
  g.h0 = (H.trace() / static_cast<double>(alg.spinor_dim())).real();
  g.h2_norm = alg.grade_project(H, 2).cwiseAbs().maxCoeff();
  g.h4 = alg.grade_project(H, 4);
  return g;
}

CMatrix h4_formula(const CliffordAlgebra& alg, const RiemannTensor& W) {
  const int n = alg.dim();
  // Q(ab, cd) = sum_{k,l} W_klab W_klcd
  auto Q = [&](int a, int b, int c, int d) {
    double s = 0.0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) s += W(k, l, a, b) * W(k, l, c, d);
    return s;
  };
  CMatrix out = CMatrix::Zero(alg.spinor_dim(), alg.spinor_dim());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const double coeff = -0.5 * (Q(a, b, c, d) - Q(a, c, b, d) + Q(a, d, b, c));
          if (coeff == 0.0) continue;
          const int idx[4] = {a, b, c, d};
          out += coeff * alg.monomial(idx);
        }
  return out;
}

EndoFamily build_endo_family(const CliffordAlgebra& alg, const RiemannTensor& K,
                             const CurvatureDecomposition& dec) {
  EndoFamily fam;
  fam.C = spinor_curvature(alg, K.components());
  fam.B = spinor_curvature(alg, dec.weyl.components());
  fam.F = double_contraction(fam.C);
  fam.H = double_contraction(fam.B);
  fam.grading = h_grading(alg, fam.H);
  return fam;
}

}  // namespace spinbound
