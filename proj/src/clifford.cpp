#include "clifford.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace spinbound {

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void combinations(int n, int p, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CliffordAlgebra CliffordAlgebra::build(int n) {
  if (n < kMinDim || n > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument,
                "Clifford algebra supports 4 <= n <= 8, got " + std::to_string(n));
  }
  const Complex I(0.0, 1.0);
  CMatrix id2 = CMatrix::Identity(2, 2);
  CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -I, I, 0;
  sz << 1, 0, 0, -1;

  CliffordAlgebra alg;
  alg.n_ = n;
  const int k = n / 2;
  alg.N_ = 1 << k;

  // Hermitian generators with square +1, Jordan-Wigner style.
  auto slot_product = [&](int slot, const CMatrix& m) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int s = 0; s < k; ++s) out = kron(out, s < slot ? sz : (s == slot ? m : id2));
    return out;
  };
  for (int j = 0; j < k; ++j) {
    alg.gamma_.push_back(I * slot_product(j, sx));
    alg.gamma_.push_back(I * slot_product(j, sy));
  }
  if (n % 2 == 1) {
    CMatrix all_z = CMatrix::Identity(1, 1);
    for (int s = 0; s < k; ++s) all_z = kron(all_z, sz);
    alg.gamma_.push_back(I * all_z);
  }

  if (n % 2 == 0) {
    CMatrix w = alg.identity();
    for (int i = 0; i < n; ++i) w = w * alg.gamma_[static_cast<size_t>(i)];
    alg.chirality_ = std::pow(I, k) * w;
    for (int a = 0; a < alg.N_; ++a) {
      (alg.chirality_(a, a).real() > 0 ? alg.plus_idx_ : alg.minus_idx_).push_back(a);
    }
  }

  for (int p : {2, 4}) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    combinations(n, p, 0, cur, sets);
    auto& dst = p == 2 ? alg.degree2_ : alg.degree4_;
    for (auto& s : sets) {
      CMatrix m = alg.monomial(s);
      dst.push_back({std::move(s), std::move(m)});
    }
  }
  return alg;
}

const CMatrix& CliffordAlgebra::chirality() const {
  if (!has_chirality()) {
    throw Error(ErrorCode::kInvalidArgument, "chirality is defined only for even n");
  }
  return chirality_;
}

CMatrix CliffordAlgebra::vector_mult(std::span<const double> v) const {
  CMatrix out = CMatrix::Zero(N_, N_);
  for (int i = 0; i < n_; ++i)
    if (v[static_cast<size_t>(i)] != 0.0) out += v[static_cast<size_t>(i)] * gamma(i);
  return out;
}

CMatrix CliffordAlgebra::monomial(std::span<const int> idx) const {
  CMatrix out = identity();
  for (int i : idx) out = out * gamma(i);
  return out;
}

CMatrix CliffordAlgebra::grade_project(const CMatrix& endo, int p) const {
  if (p == 0) return (endo.trace() / static_cast<double>(N_)) * identity();
  if (p != 2 && p != 4) {
    throw Error(ErrorCode::kInvalidArgument, "grade_project: degree must be 0, 2 or 4");
  }
  const auto& basis = p == 2 ? degree2_ : degree4_;
  CMatrix out = CMatrix::Zero(N_, N_);
  for (const auto& m : basis) {
    // monomials are unitary, so tr(m^* m) = N
    const Complex coeff = (m.mat.adjoint() * endo).trace() / static_cast<double>(N_);
    out += coeff * m.mat;
  }
  return out;
}

ChiralBlocks CliffordAlgebra::chirality_split(const CMatrix& endo) const {
  const CMatrix& w = chirality();
  const double comm = (w * endo - endo * w).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, endo.cwiseAbs().maxCoeff());
  if (comm > 1e-10 * scale) {
    throw Error(ErrorCode::kInvalidArgument,
                "chirality_split: endomorphism does not commute with chirality");
  }
  auto block = [&](const std::vector<int>& rows) {
    const auto m = static_cast<Eigen::Index>(rows.size());
    CMatrix b(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index c = 0; c < m; ++c)
        b(a, c) = endo(rows[static_cast<size_t>(a)], rows[static_cast<size_t>(c)]);
    return b;
  };
  return {block(plus_idx_), block(minus_idx_)};
}

}  // namespace spinbound
