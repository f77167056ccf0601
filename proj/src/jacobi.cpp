#include "jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace spinbound {

namespace {

constexpr double kOffThreshold = 1e-13;
constexpr int kMaxSweeps = 100;

double off_norm_sq(const CMatrix& A) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (i != j) s += std::norm(A(i, j));
  return s;
}

}  // namespace

HermitianEigen hermitian_eigensystem(const CMatrix& mat) {
  const Eigen::Index n = mat.rows();
  if (mat.cols() != n) throw Error(ErrorCode::kInvalidArgument, "eigensolver: matrix not square");
  const double scale = mat.norm();
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (n > 0 && herm > 1e-10 * std::max(1.0, scale)) {
    throw Error(ErrorCode::kNumeric, "eigensolver: matrix is not Hermitian");
  }

  CMatrix A = 0.5 * (mat + mat.adjoint());
  CMatrix V = CMatrix::Identity(n, n);
  HermitianEigen out;

  const double target = kOffThreshold * kOffThreshold * scale * scale;
  while (off_norm_sq(A) > target && out.sweeps < kMaxSweeps) {
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = A(p, q);
        const double mag = std::abs(apq);
        // Negligible pivots (including denormals, whose phase apq / mag is
        // inaccurate) are dropped rather than rotated.
        if (mag <= 1e-18 * scale) {
          A(p, q) = 0.0;
          A(q, p) = 0.0;
          continue;
        }
        // Phase Phi = diag(1, conj(e)) makes the pivot real, then a real
        // rotation annihilates it: U = Phi * [[c, s], [-s, c]].
        const Complex e = apq / mag;
        const double app = A(p, p).real(), aqq = A(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u00 = c, u01 = s, u10 = -s * std::conj(e), u11 = c * std::conj(e);

        for (Eigen::Index k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = A(k, p), akq = A(k, q);
          A(k, p) = akp * u00 + akq * u10;
          A(k, q) = akp * u01 + akq * u11;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // A <- U^* A
          const Complex apk = A(p, k), aqk = A(q, k);
          A(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          A(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        A(p, p) = A(p, p).real();
        A(q, q) = A(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {  // V <- V U
          const Complex vkp = V(k, p), vkq = V(k, q);
          V(k, p) = vkp * u00 + vkq * u10;
          V(k, q) = vkp * u01 + vkq * u11;
        }
      }
  }
  if (off_norm_sq(A) > target) {
    throw Error(ErrorCode::kNumeric, "eigensolver: Jacobi iteration did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return A(a, a).real() < A(b, b).real(); });
  out.values.reserve(static_cast<size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values.push_back(A(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real());
    out.vectors.col(k) = V.col(order[static_cast<size_t>(k)]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& mat) {
  return hermitian_eigensystem(mat).values;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& mat) {
  return hermitian_eigenvalues(mat.cast<Complex>());
}

}  // namespace spinbound
