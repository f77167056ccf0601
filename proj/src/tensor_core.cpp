#include "tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace spinbound {

Tensor4::Tensor4(int n, std::vector<double> values) : n_(n), v_(std::move(values)) {
  if (v_.size() != static_cast<size_t>(n) * n * n * n) {
    throw Error(ErrorCode::kInvalidArgument, "Tensor4: expected n^4 components");
  }
}

double Tensor4::norm_sq() const {
  double s = 0.0;
  for (double x : v_) s += x * x;
  return s;
}

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

Tensor4& Tensor4::operator+=(const Tensor4& o) {
  for (size_t a = 0; a < v_.size(); ++a) v_[a] += o.v_[a];
  return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& o) {
  for (size_t a = 0; a < v_.size(); ++a) v_[a] -= o.v_[a];
  return *this;
}

Tensor4& Tensor4::operator*=(double s) {
  for (double& x : v_) x *= s;
  return *this;
}

SymmetryResiduals symmetry_residuals(const Tensor4& T) {
  SymmetryResiduals r;
  const int n = T.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = T(i, j, k, l);
          r.antisymmetry = std::max({r.antisymmetry, std::abs(v + T(j, i, k, l)),
                                     std::abs(v + T(i, j, l, k))});
          r.pair_symmetry = std::max(r.pair_symmetry, std::abs(v - T(k, l, i, j)));
          r.bianchi = std::max(r.bianchi, std::abs(v + T(j, k, i, l) + T(k, i, j, l)));
        }
  return r;
}

RiemannTensor validate_riemann(Tensor4 comp) {
  if (comp.dim() < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "curvature tensor dimension must be at least 4, got " +
                    std::to_string(comp.dim()));
  }
  const SymmetryResiduals r = symmetry_residuals(comp);
  const double worst = std::max({r.antisymmetry, r.pair_symmetry, r.bianchi});
  if (worst > kSymmetryTolerance) {
    const char* which = r.antisymmetry == worst  ? "antisymmetry"
                        : r.pair_symmetry == worst ? "pair symmetry"
                                                   : "first Bianchi identity";
    std::ostringstream os;
    os.precision(3);
    os << "curvature tensor violates " << which << " (residual " << worst
       << " > " << kSymmetryTolerance << ")";
    throw Error(ErrorCode::kValidation, os.str());
  }
  return RiemannTensor::assume_valid(std::move(comp));
}

Tensor4 kulkarni_nomizu(const Eigen::MatrixXd& h, const Eigen::MatrixXd& k) {
  const int n = static_cast<int>(h.rows());
  Tensor4 T(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          T(i, j, a, b) = h(i, a) * k(j, b) + h(j, b) * k(i, a) -
                          h(i, b) * k(j, a) - h(j, a) * k(i, b);
  return T;
}

Eigen::MatrixXd ricci_of(const Tensor4& comp) {
  const int n = comp.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) ric(i, j) += comp(i, k, j, k);
  return ric;
}

Eigen::MatrixXd schouten(const Eigen::MatrixXd& ricci, double scalar) {
  const auto n = static_cast<double>(ricci.rows());
  return (ricci - scalar / (2.0 * (n - 1.0)) *
                      Eigen::MatrixXd::Identity(ricci.rows(), ricci.cols())) /
         (n - 2.0);
}

CurvatureDecomposition decompose(const RiemannTensor& K) {
  const int n = K.dim();
  CurvatureDecomposition d;
  d.ricci = ricci_of(K.components());
  d.scalar = d.ricci.trace();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Tensor4 weyl = K.components() - kulkarni_nomizu(schouten(d.ricci, d.scalar), id);
  d.weyl_norm_sq = weyl.norm_sq();
  d.weyl = RiemannTensor::assume_valid(std::move(weyl));
  d.ricci_deviation_sq = (d.ricci - d.scalar / n * id).squaredNorm();
  return d;
}

Tensor4 reconstruct(const CurvatureDecomposition& d) {
  const auto n = d.ricci.rows();
  return d.weyl.components() +
         kulkarni_nomizu(schouten(d.ricci, d.scalar), Eigen::MatrixXd::Identity(n, n));
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j) {
  // rows 0..i-1 contribute (n-1) + (n-2) + ... pairs
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

TwoFormOperator curvature_operator(const RiemannTensor& K) {
  const int n = K.dim();
  TwoFormOperator op{n, Eigen::MatrixXd::Zero(pair_count(n), pair_count(n))};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          op.mat(pair_index(n, i, j), pair_index(n, k, l)) = K(i, j, k, l);
  return op;
}

RiemannTensor random_curvature(int n, uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "random_curvature: n must be >= 4");
  std::mt19937_64 gen(derive_seed(seed, 0x52494d41ull));
  std::normal_distribution<double> normal(0.0, 1.0);
  Tensor4 A(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) A(i, j, k, l) = normal(gen);

  // Average over the order-8 group generated by the two antisymmetries and
  // the pair exchange, then remove the cyclic (Bianchi) part.
  Tensor4 S(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          S(i, j, k, l) = (A(i, j, k, l) - A(j, i, k, l) - A(i, j, l, k) + A(j, i, l, k) +
                           A(k, l, i, j) - A(l, k, i, j) - A(k, l, j, i) + A(l, k, j, i)) /
                          8.0;
  Tensor4 R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          R(i, j, k, l) =
              S(i, j, k, l) - (S(i, j, k, l) + S(j, k, i, l) + S(k, i, j, l)) / 3.0;
  return RiemannTensor::assume_valid(std::move(R));
}

RiemannTensor change_frame(const RiemannTensor& K, const Eigen::MatrixXd& O) {
  const int n = K.dim();
  // Contract one index at a time: n^5 work instead of n^8.
  Tensor4 a = K.components();
  Tensor4 b(n);
  for (int slot = 0; slot < 4; ++slot) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int m = 0; m < n; ++m) {
              switch (slot) {
                case 0: s += O(i, m) * a(m, j, k, l); break;
                case 1: s += O(j, m) * a(i, m, k, l); break;
                case 2: s += O(k, m) * a(i, j, m, l); break;
                default: s += O(l, m) * a(i, j, k, m); break;
              }
            }
            b(i, j, k, l) = s;
          }
    std::swap(a, b);
  }
  return RiemannTensor::assume_valid(std::move(a));
}

Eigen::MatrixXd random_orthogonal(int n, uint64_t seed) {
  std::mt19937_64 gen(derive_seed(seed, 0x4f525448ull));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = normal(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd Rm = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (Rm(j, j) < 0) Q.col(j) *= -1.0;
  return Q;
}

namespace {

int levi_civita4(int a, int b, int c, int d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) return 0;
  int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

void require_dim4(const RiemannTensor& W, const char* what) {
  if (W.dim() != 4) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " requires n = 4, got " + std::to_string(W.dim()));
  }
}

}  // namespace

Tensor4 hodge_star_left(const Tensor4& W) {
  Tensor4 S(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double s = 0.0;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) s += levi_civita4(i, j, a, b) * W(a, b, k, l);
          S(i, j, k, l) = 0.5 * s;
        }
  return S;
}

Eigen::Matrix<double, 6, 3> selfdual_basis(int sign) {
  // pair order: 01 02 03 12 13 23;  *e01 = e23, *e02 = -e13, *e03 = e12
  const double h = 1.0 / std::sqrt(2.0);
  const double s = sign > 0 ? 1.0 : -1.0;
  Eigen::Matrix<double, 6, 3> P = Eigen::Matrix<double, 6, 3>::Zero();
  P(0, 0) = h;  P(5, 0) = s * h;
  P(1, 1) = h;  P(4, 1) = -s * h;
  P(2, 2) = h;  P(3, 2) = s * h;
  return P;
}

SelfDualSplit selfdual_split(const RiemannTensor& W) {
  require_dim4(W, "selfdual_split");
  const Eigen::MatrixXd M = curvature_operator(W).mat;
  const auto Pp = selfdual_basis(+1);
  const auto Pm = selfdual_basis(-1);
  SelfDualSplit out;
  out.plus = Pp.transpose() * M * Pp;
  out.minus = Pm.transpose() * M * Pm;
  out.cross_residual = (Pp.transpose() * M * Pm).cwiseAbs().maxCoeff();
  return out;
}

double selfdual_norm_sq(const RiemannTensor& W, int sign) {
  require_dim4(W, "selfdual_norm_sq");
  Tensor4 S = hodge_star_left(W.components());
  if (sign < 0) S *= -1.0;
  return 0.25 * (W.components() + S).norm_sq();
}

}  // namespace spinbound
