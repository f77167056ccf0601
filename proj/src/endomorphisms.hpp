#pragma once

#include <vector>

#include "clifford.hpp"
#include "tensor_core.hpp"

namespace spinbound {

// Antisymmetric family (i, j) -> endomorphism, evaluated on frame vectors.
class PairFamily {
 public:
  PairFamily() = default;
  PairFamily(int n, int N);

  int dim() const { return n_; }
  CMatrix& operator()(int i, int j) { return m_[static_cast<size_t>(i * n_ + j)]; }
  const CMatrix& operator()(int i, int j) const { return m_[static_cast<size_t>(i * n_ + j)]; }

  // Bilinear extension to arbitrary vectors X, Y.
  CMatrix evaluate(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

 private:
  int n_ = 0;
  std::vector<CMatrix> m_;
};

// Spinor curvature of a curvature-type tensor T:
//   S(e_i, e_j) = 1/4 sum_k e_k . T(e_i, e_j) e_k = -1/4 sum_{k,l} T_ijkl gamma_k gamma_l
// With T = K this is C (curvature of the spinor bundle); with T = W it is B.
PairFamily spinor_curvature(const CliffordAlgebra& alg, const Tensor4& T);

CMatrix c_endo(const CliffordAlgebra& alg, const RiemannTensor& K, int i, int j);
CMatrix b_endo(const CliffordAlgebra& alg, const RiemannTensor& W, int i, int j);

// E(X, Y) = -sum_k S(e_k, Y) S(e_k, X); with S = B this is G.
CMatrix contracted_product(const PairFamily& S, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y);
CMatrix contracted_product(const PairFamily& S, int x, int y);

// -sum_{k,l} S(e_k, e_l) S(e_k, e_l): F for S = C, H for S = B.
CMatrix double_contraction(const PairFamily& S);

CMatrix f_endo(const CliffordAlgebra& alg, const RiemannTensor& K);
CMatrix h_endo(const CliffordAlgebra& alg, const RiemannTensor& W);

struct HGrading {
  double h0 = 0.0;       // scalar part
  double h2_norm = 0.0;  // max |entry| of the degree-2 part
  CMatrix h4;            // degree-4 part
};

HGrading h_grading(const CliffordAlgebra& alg, const CMatrix& H);

// Degree-4 part of H summed directly from the Weyl tensor:
//   H4 = -1/2 sum_{k,l} sum_{a<b<c<d} (W_klab W_klcd - W_klac W_klbd + W_klad W_klbc)
//        gamma_a gamma_b gamma_c gamma_d
CMatrix h4_formula(const CliffordAlgebra& alg, const RiemannTensor& W);

// Everything derived from one curvature sample.
struct EndoFamily {
  PairFamily C;
  PairFamily B;
  CMatrix F;
  CMatrix H;
  HGrading grading;
};

EndoFamily build_endo_family(const CliffordAlgebra& alg, const RiemannTensor& K,
                             const CurvatureDecomposition& dec);

}  // namespace spinbound
