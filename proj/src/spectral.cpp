#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "error.hpp"
#include "jacobi.hpp"
#include "rng.hpp"

namespace spinbound {

namespace {

constexpr double kClampTolerance = 1e-10;
constexpr int kAscentIterations = 500;
constexpr int kPolishIterations = 200;
constexpr double kGradientTolerance = 1e-10;

double clamp_nonnegative(double v, double scale, const char* what) {
  const double tol = kClampTolerance * std::max(1.0, scale);
  if (v < -tol) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": smallest eigenvalue " << v << " is negative beyond tolerance " << tol;
    throw Error(ErrorCode::kNumeric, os.str());
  }
  return v < 0.0 ? 0.0 : v;
}

double operator_scale(const std::vector<double>& ev) {
  return ev.empty() ? 0.0 : std::max(std::abs(ev.front()), std::abs(ev.back()));
}

struct PairEval {
  double value = 0.0;   // lambda^2
  double lambda = 0.0;  // eigenvalue of i B(X,Y) with the largest modulus
  CVector v;
};

PairEval evaluate_pair(const PairFamily& B, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const CMatrix M = Complex(0.0, 1.0) * B.evaluate(x, y);
  HermitianEigen es = hermitian_eigensystem(M);
  const Eigen::Index last = static_cast<Eigen::Index>(es.values.size()) - 1;
  const bool low = std::abs(es.values.front()) > std::abs(es.values.back());
  PairEval e;
  e.lambda = low ? es.values.front() : es.values.back();
  e.v = es.vectors.col(low ? 0 : last);
  e.value = e.lambda * e.lambda;
  return e;
}

// q_ij = <v, i B(e_i, e_j) v>, a real antisymmetric matrix.
Eigen::MatrixXd spinor_pairing(const PairFamily& B, const CVector& v) {
  const int n = B.dim();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      q(i, j) = (v.adjoint() * (Complex(0.0, 1.0) * B(i, j)) * v)(0, 0).real();
      q(j, i) = -q(i, j);
    }
  return q;
}

bool orthonormalize(Eigen::VectorXd& x, Eigen::VectorXd& y) {
  const double nx = x.norm();
  if (nx < 1e-300) return false;
  x /= nx;
  y -= x.dot(y) * x;
  const double ny = y.norm();
  if (ny < 1e-300) return false;
  y /= ny;
  return true;
}

struct Pair {
  Eigen::VectorXd x, y;
  PairEval eval;
};

void gradient_ascent(const PairFamily& B, Pair& p) {
  double eta = -1.0;
  for (int it = 0; it < kAscentIterations; ++it) {
    const Eigen::MatrixXd q = spinor_pairing(B, p.eval.v);
    const Eigen::VectorXd gx = 2.0 * p.eval.lambda * (q * p.y);
    const Eigen::VectorXd gy = 2.0 * p.eval.lambda * (q.transpose() * p.x);
    // Riemannian gradient on the Stiefel manifold: G - Z sym(Z^T G)
    const double xx = p.x.dot(gx), yy = p.y.dot(gy);
    const double xy = 0.5 * (p.x.dot(gy) + p.y.dot(gx));
    const Eigen::VectorXd rx = gx - xx * p.x - xy * p.y;
    const Eigen::VectorXd ry = gy - xy * p.x - yy * p.y;
    const double gnorm = std::sqrt(rx.squaredNorm() + ry.squaredNorm());
    if (gnorm <= kGradientTolerance * std::max(1.0, p.eval.value)) return;
    if (eta < 0) eta = 0.1 / gnorm;

    bool improved = false;
    for (int halvings = 0; halvings < 60; ++halvings, eta *= 0.5) {
      Eigen::VectorXd nx = p.x + eta * rx, ny = p.y + eta * ry;
      if (!orthonormalize(nx, ny)) continue;
      PairEval e = evaluate_pair(B, nx, ny);
      if (e.value > p.eval.value) {
        p.x = std::move(nx);
        p.y = std::move(ny);
        p.eval = std::move(e);
        improved = true;
        break;
      }
    }
    if (!improved) return;
    eta *= 2.0;
  }
}

// For fixed spinor v the best pair spans the top invariant plane of the
// antisymmetric matrix q; for a fixed pair the best spinor is the top
// eigenvector. Each half-step can only increase the objective.
void alternating_polish(const PairFamily& B, Pair& p) {
  for (int it = 0; it < kPolishIterations; ++it) {
    const Eigen::MatrixXd q = spinor_pairing(B, p.eval.v);
    const HermitianEigen es = hermitian_eigensystem(Complex(0.0, 1.0) * q.cast<Complex>());
    const CVector w = es.vectors.col(static_cast<Eigen::Index>(es.values.size()) - 1);
    Eigen::VectorXd nx = w.imag(), ny = w.real();
    if (!orthonormalize(nx, ny)) return;
    PairEval e = evaluate_pair(B, nx, ny);
    if (!(e.value > p.eval.value * (1.0 + 1e-15))) return;
    p.x = std::move(nx);
    p.y = std::move(ny);
    p.eval = std::move(e);
  }
}

}  // namespace

Nu0Result nu0(const CliffordAlgebra& alg, const CMatrix& H, bool chiral) {
  Nu0Result r;
  const std::vector<double> ev = hermitian_eigenvalues(H);
  const double scale = operator_scale(ev);
  r.nu0 = clamp_nonnegative(ev.front(), scale, "nu0");
  if (chiral) {
    const ChiralBlocks blocks = alg.chirality_split(H);
    r.plus = clamp_nonnegative(hermitian_eigenvalues(blocks.plus).front(), scale, "nu0_plus");
    r.minus = clamp_nonnegative(hermitian_eigenvalues(blocks.minus).front(), scale, "nu0_minus");
    r.nu0 = std::min(*r.plus, *r.minus);
  }
  return r;
}

double pair_norm_sq(const PairFamily& B, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return evaluate_pair(B, x, y).value;
}

Mu0Result mu0_sq(const PairFamily& B, const Mu0Options& opt) {
  if (opt.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "mu0_sq: restarts must be >= 1");
  const int n = B.dim();
  Mu0Result res;
  res.x = Eigen::VectorXd::Unit(n, 0);
  res.y = Eigen::VectorXd::Unit(n, 1);

  double max_entry = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) max_entry = std::max(max_entry, B(i, j).cwiseAbs().maxCoeff());
  if (max_entry == 0.0) return res;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i), ej = Eigen::VectorXd::Unit(n, j);
      const double v = pair_norm_sq(B, ei, ej);
      if (v > res.coordinate_best) {
        res.coordinate_best = v;
        res.x = ei;
        res.y = ej;
      }
    }
  res.value = res.coordinate_best;

  for (int r = 0; r < opt.restarts; ++r) {
    Pair p;
    if (r == 0) {
      p.x = res.x;
      p.y = res.y;
    } else {
      std::mt19937_64 gen(derive_seed(opt.seed, static_cast<uint64_t>(r)));
      std::normal_distribution<double> normal(0.0, 1.0);
      p.x.resize(n);
      p.y.resize(n);
      for (int i = 0; i < n; ++i) p.x(i) = normal(gen);
      for (int i = 0; i < n; ++i) p.y(i) = normal(gen);
      if (!orthonormalize(p.x, p.y)) continue;
    }
    p.eval = evaluate_pair(B, p.x, p.y);
    gradient_ascent(B, p);
    alternating_polish(B, p);
    if (p.eval.value > res.value) {
      res.value = p.eval.value;
      res.x = p.x;
      res.y = p.y;
    }
  }
  res.gap = res.value - res.coordinate_best;
  return res;
}

double sigma(const TwoFormOperator& op) {
  return operator_scale(symmetric_eigenvalues(op.mat));
}

double kappa(const Eigen::MatrixXd& ricci) { return symmetric_eigenvalues(ricci).back(); }

PointQuantities point_quantities(const CliffordAlgebra& alg, const RiemannTensor& K,
                                 const PointOptions& opt) {
  const CurvatureDecomposition dec = decompose(K);
  const PairFamily B = spinor_curvature(alg, dec.weyl.components());
  const CMatrix H = double_contraction(B);

  PointQuantities q;
  q.scalar = dec.scalar;
  q.ric_dev_sq = dec.ricci_deviation_sq;
  q.ric_sq = dec.ricci.squaredNorm();
  q.weyl_norm_sq = dec.weyl_norm_sq;
  const Nu0Result nu = nu0(alg, H, opt.chiral && alg.has_chirality());
  q.nu = nu.nu0;
  q.nu_plus = nu.plus;
  q.nu_minus = nu.minus;
  const Mu0Result mu = mu0_sq(B, opt.mu0);
  q.mu0_sq = mu.value;
  q.mu0_gap = mu.gap;
  q.sigma = sigma(curvature_operator(K));
  q.kappa = kappa(dec.ricci);
  const double ric_norm = std::sqrt(q.ric_sq);
  const double curv_scale = std::max(1.0, K.components().max_abs());
  q.einstein = std::sqrt(q.ric_dev_sq) <= 1e-9 * std::max(1.0, ric_norm);
  q.ricci_flat = ric_norm <= 1e-9 * curv_scale;
  return q;
}

SpectralSummary summarize(int n, std::span<const PointQuantities> samples) {
  if (samples.empty()) throw Error(ErrorCode::kInvalidArgument, "summarize: no samples");
  SpectralSummary s;
  s.n = n;
  s.samples = static_cast<int>(samples.size());
  const PointQuantities& first = samples.front();
  s.nu0 = first.nu;
  s.nu0_plus = first.nu_plus;
  s.nu0_minus = first.nu_minus;
  s.mu0_sq = first.mu0_sq;
  s.mu0_gap = first.mu0_gap;
  s.sigma = first.sigma;
  s.kappa = first.kappa;
  s.R0 = s.R_max = first.scalar;
  s.ric_dev0_sq = first.ric_dev_sq;
  s.ric0_sq = first.ric_sq;
  s.einstein = first.einstein;
  s.ricci_flat = first.ricci_flat;
  for (const PointQuantities& q : samples.subspan(1)) {
    s.nu0 = std::min(s.nu0, q.nu);
    if (s.nu0_plus && q.nu_plus) s.nu0_plus = std::min(*s.nu0_plus, *q.nu_plus);
    if (s.nu0_minus && q.nu_minus) s.nu0_minus = std::min(*s.nu0_minus, *q.nu_minus);
    if (q.mu0_sq > s.mu0_sq) {
      s.mu0_sq = q.mu0_sq;
      s.mu0_gap = q.mu0_gap;
    }
    s.sigma = std::max(s.sigma, q.sigma);
    s.kappa = std::max(s.kappa, q.kappa);
    s.R0 = std::min(s.R0, q.scalar);
    s.R_max = std::max(s.R_max, q.scalar);
    s.ric_dev0_sq = std::min(s.ric_dev0_sq, q.ric_dev_sq);
    s.ric0_sq = std::min(s.ric0_sq, q.ric_sq);
    s.einstein = s.einstein && q.einstein;
    s.ricci_flat = s.ricci_flat && q.ricci_flat;
  }
  return s;
}

}  // namespace spinbound
