#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spinbound {

// Dense real 4-index array over an n-dimensional orthonormal frame.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), v_(static_cast<size_t>(n) * n * n * n, 0.0) {}
  Tensor4(int n, std::vector<double> values);

  int dim() const { return n_; }

  double& operator()(int i, int j, int k, int l) { return v_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return v_[index(i, j, k, l)]; }

  std::span<const double> data() const { return v_; }

  // Sum of squares over all four unrestricted indices.
  double norm_sq() const;
  double max_abs() const;

  Tensor4& operator+=(const Tensor4& o);
  Tensor4& operator-=(const Tensor4& o);
  Tensor4& operator*=(double s);
  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
  friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }

  bool operator==(const Tensor4&) const = default;

 private:
  size_t index(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }

  int n_ = 0;
  std::vector<double> v_;
};

// Algebraic curvature tensor. comp(i,j,k,l) = <K(e_i,e_j) e_l, e_k>, so that
// comp(i,j,i,j) is the sectional curvature of the (e_i,e_j) plane and the
// round sphere of curvature c has comp = c (d_ik d_jl - d_il d_jk).
class RiemannTensor {
 public:
  RiemannTensor() = default;  // empty, dimension 0
  int dim() const { return comp_.dim(); }
  double operator()(int i, int j, int k, int l) const { return comp_(i, j, k, l); }
  const Tensor4& components() const { return comp_; }

  // Wraps components whose symmetries hold by construction (generators,
  // catalog, decompositions). External data goes through validate_riemann.
  static RiemannTensor assume_valid(Tensor4 comp) { return RiemannTensor(std::move(comp)); }

  bool operator==(const RiemannTensor&) const = default;

 private:
  explicit RiemannTensor(Tensor4 comp) : comp_(std::move(comp)) {}
  Tensor4 comp_;
};

struct SymmetryResiduals {
  double antisymmetry = 0.0;
  double pair_symmetry = 0.0;
  double bianchi = 0.0;
};

SymmetryResiduals symmetry_residuals(const Tensor4& comp);

inline constexpr double kSymmetryTolerance = 1e-10;

// Checks (never enforces) the three curvature symmetries. Throws
// Error(kValidation) naming the worst residual, or kInvalidArgument for n < 4.
RiemannTensor validate_riemann(Tensor4 comp);

struct CurvatureDecomposition {
  Eigen::MatrixXd ricci;
  double scalar = 0.0;
  RiemannTensor weyl;
  double ricci_deviation_sq = 0.0;  // |Ric - (R/n) id|^2, Frobenius
  double weyl_norm_sq = 0.0;        // full four-index sum
};

// (h (.) k)_{ijkl} = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il
Tensor4 kulkarni_nomizu(const Eigen::MatrixXd& h, const Eigen::MatrixXd& k);

// Schouten tensor (Ric - R/(2(n-1)) g)/(n-2); comp = W + schouten (.) g.
Eigen::MatrixXd schouten(const Eigen::MatrixXd& ricci, double scalar);

Eigen::MatrixXd ricci_of(const Tensor4& comp);

CurvatureDecomposition decompose(const RiemannTensor& K);

// Weyl + Kulkarni-Nomizu completion; the inverse of decompose.
Tensor4 reconstruct(const CurvatureDecomposition& d);

// Symmetric operator on two-forms in the ordered basis e_i ^ e_j, i < j,
// normalized so constant sectional curvature c has every eigenvalue c.
struct TwoFormOperator {
  int n = 0;
  Eigen::MatrixXd mat;
};

int pair_count(int n);
int pair_index(int n, int i, int j);  // requires i < j

TwoFormOperator curvature_operator(const RiemannTensor& K);

// Deterministic random algebraic curvature tensor with entries of order one.
RiemannTensor random_curvature(int n, uint64_t seed);

// comp'_{ijkl} = O_ia O_jb O_kc O_ld comp_{abcd}; O must be orthogonal.
RiemannTensor change_frame(const RiemannTensor& K, const Eigen::MatrixXd& O);

// Uniformly distributed (Haar) orthogonal matrix.
Eigen::MatrixXd random_orthogonal(int n, uint64_t seed);

// ---- four dimensions ----------------------------------------------------

// (*W)_{ijkl} = 1/2 eps_{ijab} W_{abkl} with eps_{0123} = +1.
Tensor4 hodge_star_left(const Tensor4& W);

struct SelfDualSplit {
  Eigen::Matrix3d plus;   // W on Lambda^2_+ (Hodge star eigenvalue +1)
  Eigen::Matrix3d minus;  // W on Lambda^2_-
  double cross_residual = 0.0;  // max |entry| of the off-diagonal blocks
};

// Orthonormal bases of Lambda^2_{+/-} as columns in the pair basis.
Eigen::Matrix<double, 6, 3> selfdual_basis(int sign);

SelfDualSplit selfdual_split(const RiemannTensor& W);

// |W + sign * (*W)|^2 measured as the Hilbert-Schmidt norm of an operator on
// Lambda^2 (pairs i<j, k<l), i.e. one quarter of the four-index sum.
double selfdual_norm_sq(const RiemannTensor& W, int sign);

}  // namespace spinbound
