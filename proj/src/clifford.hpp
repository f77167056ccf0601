#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spinbound {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct ChiralBlocks {
  CMatrix plus;
  CMatrix minus;
};

// Complex representation of Cl(n) on spinors of dimension 2^floor(n/2):
// gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij, gamma_i^* = -gamma_i.
// Generators are tensor products of Pauli matrices times i, so every entry
// lies in {0, +-1, +-i}. For even n the chirality element is
// i^{n/2} gamma_1 ... gamma_n; it is diagonal with entries +-1.
class CliffordAlgebra {
 public:
  static constexpr int kMinDim = 4;
  static constexpr int kMaxDim = 8;

  static CliffordAlgebra build(int n);

  int dim() const { return n_; }
  int spinor_dim() const { return N_; }
  const CMatrix& gamma(int i) const { return gamma_[static_cast<size_t>(i)]; }
  bool has_chirality() const { return n_ % 2 == 0; }
  const CMatrix& chirality() const;

  CMatrix identity() const { return CMatrix::Identity(N_, N_); }

  // Clifford multiplication by sum_i v_i e_i.
  CMatrix vector_mult(std::span<const double> v) const;
  CMatrix vector_mult(const Eigen::VectorXd& v) const {
    return vector_mult(std::span<const double>(v.data(), static_cast<size_t>(v.size())));
  }

  // gamma_{i1} ... gamma_{ip} in the order given.
  CMatrix monomial(std::span<const int> idx) const;

  // Degree-p component in the basis of increasing monomials, extracted with
  // the trace pairing <A, B> = tr(A^* B) / N. p in {0, 2, 4}.
  CMatrix grade_project(const CMatrix& endo, int p) const;

  // Diagonal blocks in the chirality eigenbasis ("plus" = eigenvalue +1).
  // Throws unless n is even and [endo, chirality] vanishes within 1e-10.
  ChiralBlocks chirality_split(const CMatrix& endo) const;

 private:
  struct Monomial {
    std::vector<int> idx;
    CMatrix mat;
  };

  int n_ = 0;
  int N_ = 0;
  std::vector<CMatrix> gamma_;
  CMatrix chirality_;
  std::vector<int> plus_idx_, minus_idx_;
  std::vector<Monomial> degree2_, degree4_;
};

}  // namespace spinbound
