#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clifford.hpp"
#include "endomorphisms.hpp"
#include "tensor_core.hpp"

namespace spinbound {

struct Nu0Result {
  double nu0 = 0.0;
  std::optional<double> plus;
  std::optional<double> minus;
};

// Smallest eigenvalue of H; values in [-tol, 0) are clamped to 0 with
// tol = 1e-10 * max(1, |H|_op). Anything below -tol is a genuine violation of
// nonnegativity and throws Error(kNumeric). With chiral set (even n only) the
// two chirality blocks are diagonalized separately.
Nu0Result nu0(const CliffordAlgebra& alg, const CMatrix& H, bool chiral);

struct Mu0Options {
  int restarts = 64;
  uint64_t seed = 1;
};

struct Mu0Result {
  double value = 0.0;  // max |B(X,Y)|_op^2 over orthonormal pairs found
  Eigen::VectorXd x, y;
  double coordinate_best = 0.0;  // max over (e_i, e_j)
  double gap = 0.0;              // value - coordinate_best
};

// |B(X,Y)|^2 in operator norm.
double pair_norm_sq(const PairFamily& B, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Maximizes |B(X,Y)|_op^2 over orthonormal pairs. Each restart runs projected
// gradient ascent on the Stiefel manifold (step halving, at most 500
// iterations, stop at gradient norm 1e-10) and is then polished by
// alternating maximization over the spinor and the pair. Restart 0 starts at
// the best coordinate pair, so the result never falls below it.
Mu0Result mu0_sq(const PairFamily& B, const Mu0Options& opt);

// Spectral radius of the curvature operator on two-forms.
double sigma(const TwoFormOperator& op);

// Largest Ricci eigenvalue (signed).
double kappa(const Eigen::MatrixXd& ricci);

struct PointOptions {
  bool chiral = false;
  Mu0Options mu0;
};

struct PointQuantities {
  double scalar = 0.0;
  double ric_dev_sq = 0.0;
  double ric_sq = 0.0;
  double weyl_norm_sq = 0.0;
  double nu = 0.0;
  std::optional<double> nu_plus, nu_minus;
  double mu0_sq = 0.0;
  double mu0_gap = 0.0;
  double sigma = 0.0;
  double kappa = 0.0;
  bool einstein = false;
  bool ricci_flat = false;
};

PointQuantities point_quantities(const CliffordAlgebra& alg, const RiemannTensor& K,
                                 const PointOptions& opt);

struct SpectralSummary {
  int n = 0;
  int samples = 0;
  double nu0 = 0.0;
  std::optional<double> nu0_plus, nu0_minus;
  double mu0_sq = 0.0;
  double sigma = 0.0;
  double kappa = 0.0;
  double R0 = 0.0;          // min scalar curvature
  double R_max = 0.0;       // max scalar curvature
  double ric_dev0_sq = 0.0; // min |Ric - R/n|^2
  double ric0_sq = 0.0;     // min |Ric|^2
  double mu0_gap = 0.0;     // certificate gap at the maximizing sample
  bool einstein = false;    // every sample
  bool ricci_flat = false;  // every sample
};

// Minima for nu, R, |Ric - R/n|^2, |Ric|^2; maxima for mu0^2, sigma, kappa.
SpectralSummary summarize(int n, std::span<const PointQuantities> samples);

}  // namespace spinbound
