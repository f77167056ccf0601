#include "identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "error.hpp"
#include "jacobi.hpp"
#include "rng.hpp"
#include "spectral.hpp"

namespace spinbound {

namespace {

// Tracks max |lhs - rhs| together with the size of the terms compared.
struct Residual {
  double diff = 0.0;
  double scale = 1.0;

  void add(const CMatrix& lhs, const CMatrix& rhs) {
    diff = std::max(diff, (lhs - rhs).cwiseAbs().maxCoeff());
    scale = std::max({scale, lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()});
  }
  void add(double lhs, double rhs) {
    diff = std::max(diff, std::abs(lhs - rhs));
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  void add_scale(double s) { scale = std::max(scale, std::abs(s)); }
  // lhs <= rhs
  void bound(double lhs, double rhs) {
    diff = std::max(diff, lhs - rhs);
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  double value() const { return diff / scale; }
};

Eigen::VectorXd column(const Tensor4& T, int i, int j, int m) {
  const int n = T.dim();
  Eigen::VectorXd v(n);
  for (int a = 0; a < n; ++a) v(a) = T(i, j, a, m);
  return v;
}

double re_inner(const CVector& a, const CVector& b) { return a.dot(b).real(); }

double grad_norm_sq(const SpinorJet& jet) {
  double s = 0.0;
  for (const CVector& g : jet.grad) s += g.squaredNorm();
  return s;
}

double norm_sq(const std::vector<CVector>& v) {
  double s = 0.0;
  for (const CVector& x : v) s += x.squaredNorm();
  return s;
}

// sum_{k,l} Re <M(k,l) grad_k, grad_l>
double pair_form(const std::vector<CMatrix>& M, const SpinorJet& jet, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      s += re_inner(M[static_cast<size_t>(k * n + l)] * jet.grad[static_cast<size_t>(k)],
                    jet.grad[static_cast<size_t>(l)]);
  return s;
}

double pair_form(const PairFamily& S, const SpinorJet& jet) {
  const int n = S.dim();
  double s = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      s += re_inner(S(k, l) * jet.grad[static_cast<size_t>(k)], jet.grad[static_cast<size_t>(l)]);
  return s;
}

std::vector<CMatrix> all_products(const PairFamily& S) {
  const int n = S.dim();
  std::vector<CMatrix> out(static_cast<size_t>(n * n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out[static_cast<size_t>(k * n + l)] = contracted_product(S, k, l);
  return out;
}

double op_norm_skew(const CMatrix& A) {
  const std::vector<double> ev = hermitian_eigenvalues(Complex(0.0, 1.0) * A);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

struct Entry {
  IdentityTag tag;
  std::function<Residual(const IdentityContext&, const SpinorJet*, double)> eval;
};

Residual adjoint_pair(const IdentityContext& c, const PairFamily& S) {
  Residual r;
  const int n = c.K.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.add(S(i, j).adjoint(), -S(i, j));
      r.add(contracted_product(S, i, j).adjoint(), contracted_product(S, j, i));
    }
  return r;
}

Residual commutator(const IdentityContext& c, const PairFamily& S, const Tensor4& T) {
  Residual r;
  const CliffordAlgebra& alg = *c.alg;
  const int n = c.K.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const CMatrix lhs = S(i, j) * alg.gamma(m) - alg.gamma(m) * S(i, j);
        r.add(lhs, alg.vector_mult(column(T, i, j, m)));
      }
  return r;
}

Residual nonnegative(const CMatrix& A) {
  Residual r;
  const std::vector<double> ev = hermitian_eigenvalues(A);
  r.bound(0.0, ev.front());
  r.add_scale(std::max(std::abs(ev.front()), std::abs(ev.back())));
  return r;
}

Residual selfadjoint(const CMatrix& A) {
  Residual r;
  r.add(A.adjoint(), A);
  return r;
}

const SpinorJet& need_jet(const SpinorJet* jet) {
  if (!jet) throw Error(ErrorCode::kInvalidArgument, "identity needs spinor jet data");
  return *jet;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"spinor_curvature_trace", false, false,
        "C(X,Y) = 1/4 e_k . K(X,Y)e_k = -1/4 K(X,Y)e_k . e_k"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         Residual r;
         const CliffordAlgebra& alg = *c.alg;
         const int n = c.K.dim();
         const CMatrix zero = CMatrix::Zero(alg.spinor_dim(), alg.spinor_dim());
         for (int i = 0; i < n; ++i)
           for (int j = 0; j < n; ++j) {
             CMatrix left = zero, right = zero;
             for (int k = 0; k < n; ++k) {
               const CMatrix v = alg.vector_mult(column(c.K.components(), i, j, k));
               left += alg.gamma(k) * v;
               right -= v * alg.gamma(k);
             }
             r.add(c.fam.C(i, j), 0.25 * left);
             r.add(c.fam.C(i, j), 0.25 * right);
           }
         return r;
       }},
      {{"curvature_commutator", false, false, "C(X,Y).Z - Z.C(X,Y) = K(X,Y)Z"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         return commutator(c, c.fam.C, c.K.components());
       }},
      {{"ricci_contraction", false, false, "e_k . C(e_k,Y) = 1/2 Ric(Y) = -C(e_k,Y) . e_k"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         Residual r;
         const CliffordAlgebra& alg = *c.alg;
         const int n = c.K.dim();
         for (int j = 0; j < n; ++j) {
           CMatrix left = CMatrix::Zero(alg.spinor_dim(), alg.spinor_dim()), right = left;
           for (int k = 0; k < n; ++k) {
             left += alg.gamma(k) * c.fam.C(k, j);
             right += c.fam.C(k, j) * alg.gamma(k);
           }
           const CMatrix ric = 0.5 * alg.vector_mult(Eigen::VectorXd(c.dec.ricci.col(j)));
           r.add(left, ric);
           r.add(right, -ric);
         }
         return r;
       }},
      {{"curvature_clifford_contraction", false, false,
        "e_k . K(X,e_k)Y = 2 C(X,Y) + Ric(X,Y)"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         Residual r;
         const CliffordAlgebra& alg = *c.alg;
         const int n = c.K.dim();
         for (int i = 0; i < n; ++i)
           for (int j = 0; j < n; ++j) {
             CMatrix left = CMatrix::Zero(alg.spinor_dim(), alg.spinor_dim());
             for (int k = 0; k < n; ++k)
               left += alg.gamma(k) * alg.vector_mult(column(c.K.components(), i, k, j));
             r.add(left, 2.0 * c.fam.C(i, j) + c.dec.ricci(i, j) * alg.identity());
           }
         return r;
       }},
      {{"ricci_clifford_trace", false, false, "e_k . Ric(e_k) = Ric(e_k) . e_k = -R"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         Residual r;
         const CliffordAlgebra& alg = *c.alg;
         CMatrix left = CMatrix::Zero(alg.spinor_dim(), alg.spinor_dim()), right = left;
         for (int k = 0; k < c.K.dim(); ++k) {
           const CMatrix v = alg.vector_mult(Eigen::VectorXd(c.dec.ricci.col(k)));
           left += alg.gamma(k) * v;
           right += v * alg.gamma(k);
         }
         r.add(left, -c.dec.scalar * alg.identity());
         r.add(right, -c.dec.scalar * alg.identity());
         return r;
       }},
      {{"c_e_adjoint", false, false, "C(X,Y)^* = -C(X,Y), E(X,Y)^* = E(Y,X)"},
       [](const IdentityContext& c, const SpinorJet*, double) { return adjoint_pair(c, c.fam.C); }},
      {{"f_selfadjoint", false, false, "F^* = F"},
       [](const IdentityContext& c, const SpinorJet*, double) { return selfadjoint(c.fam.F); }},
      {{"f_nonnegative", false, true, "<F psi, psi> >= 0"},
       [](const IdentityContext& c, const SpinorJet*, double) { return nonnegative(c.fam.F); }},
      {{"b_g_adjoint", false, false, "B(X,Y)^* = -B(X,Y), G(X,Y)^* = G(Y,X)"},
       [](const IdentityContext& c, const SpinorJet*, double) { return adjoint_pair(c, c.fam.B); }},
      {{"weyl_kernel", false, false, "e_k . B(e_k,Y) = 0 = B(e_k,Y) . e_k"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         Residual r;
         const CliffordAlgebra& alg = *c.alg;
         const int n = c.K.dim();
         const CMatrix zero = CMatrix::Zero(alg.spinor_dim(), alg.spinor_dim());
         for (int j = 0; j < n; ++j) {
           CMatrix left = zero, right = zero;
           for (int k = 0; k < n; ++k) {
             left += alg.gamma(k) * c.fam.B(k, j);
             right += c.fam.B(k, j) * alg.gamma(k);
             r.add_scale(c.fam.B(k, j).cwiseAbs().maxCoeff());
           }
           r.add(left, zero);
           r.add(right, zero);
         }
         return r;
       }},
      {{"h_selfadjoint", false, false, "H^* = H"},
       [](const IdentityContext& c, const SpinorJet*, double) { return selfadjoint(c.fam.H); }},
      {{"h_nonnegative", false, true, "<H psi, psi> >= 0"},
       [](const IdentityContext& c, const SpinorJet*, double) { return nonnegative(c.fam.H); }},
      {{"weyl_commutator", false, false, "B(X,Y).Z - Z.B(X,Y) = W(X,Y)Z"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         return commutator(c, c.fam.B, c.dec.weyl.components());
       }},
      {{"f_h_relation", false, false,
        "F = H + |Ric - R/n|^2 / (2(n-2)) + R^2 / (4n(n-1))"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         Residual r;
         const int n = c.K.dim();
         const double shift = c.dec.ricci_deviation_sq / (2.0 * (n - 2)) +
                              c.dec.scalar * c.dec.scalar / (4.0 * n * (n - 1));
         r.add(c.fam.F, c.fam.H + shift * c.alg->identity());
         return r;
       }},
      {{"twistor_kernel", true, false, "e_k . (nabla_k psi + 1/n e_k . D psi) = 0"},
       [](const IdentityContext& c, const SpinorJet* jp, double) {
         const SpinorJet& jet = need_jet(jp);
         Residual r;
         const std::vector<CVector> tw = twistor(*c.alg, jet);
         CVector sum = CVector::Zero(c.alg->spinor_dim());
         for (int k = 0; k < c.K.dim(); ++k) sum += c.alg->gamma(k) * tw[static_cast<size_t>(k)];
         r.add_scale(std::sqrt(norm_sq(tw)));
         r.add(sum.norm(), 0.0);
         return r;
       }},
      {{"modified_twistor_kernel", true, false, "e_k . P^t_k psi = 0"},
       [](const IdentityContext& c, const SpinorJet* jp, double t) {
         const SpinorJet& jet = need_jet(jp);
         Residual r;
         const std::vector<CVector> p = modified_twistor(*c.alg, jet, c.fam.B, t);
         CVector sum = CVector::Zero(c.alg->spinor_dim());
         for (int k = 0; k < c.K.dim(); ++k) sum += c.alg->gamma(k) * p[static_cast<size_t>(k)];
         r.add_scale(std::sqrt(norm_sq(p)));
         r.add(sum.norm(), 0.0);
         return r;
       }},
      {{"weyl_twistor_norm", true, false,
        "|P^t psi|^2 = |nabla psi|^2 - |D psi|^2/n - 2t <nabla psi, B nabla psi> "
        "+ t^2 <G nabla psi, nabla psi>"},
       [](const IdentityContext& c, const SpinorJet* jp, double t) {
         const SpinorJet& jet = need_jet(jp);
         const int n = c.K.dim();
         const std::vector<CVector> p = modified_twistor(*c.alg, jet, c.fam.B, t);
         double cross = 0.0;
         for (int k = 0; k < n; ++k)
           for (int l = 0; l < n; ++l)
             cross += re_inner(jet.grad[static_cast<size_t>(k)],
                               c.fam.B(k, l) * jet.grad[static_cast<size_t>(l)]);
         const std::vector<CMatrix> G = all_products(c.fam.B);
         const double g = pair_form(G, jet, n);
         const double d = dirac(*c.alg, jet).squaredNorm();
         const double gn = grad_norm_sq(jet);
         Residual r;
         r.add(norm_sq(p), gn - d / n - 2.0 * t * cross + t * t * g);
         r.add_scale(gn);
         r.add_scale(t * t * g);
         return r;
       }},
      {{"ricci_twistor_norm", true, false,
        "|Q^t psi|^2 = |twistor psi|^2 + 2t <C nabla psi, nabla psi> "
        "+ t/n Re <D psi, Ric(e_k) . nabla_k psi> + t^2 <E nabla psi, nabla psi>"},
       [](const IdentityContext& c, const SpinorJet* jp, double t) {
         const SpinorJet& jet = need_jet(jp);
         const CliffordAlgebra& alg = *c.alg;
         const int n = c.K.dim();
         const std::vector<CVector> q = modified_twistor(alg, jet, c.fam.C, t);
         const CVector D = dirac(alg, jet);
         CVector ric = CVector::Zero(alg.spinor_dim());
         for (int k = 0; k < n; ++k)
           ric += alg.vector_mult(Eigen::VectorXd(c.dec.ricci.col(k))) *
                  jet.grad[static_cast<size_t>(k)];
         const std::vector<CMatrix> E = all_products(c.fam.C);
         const double e = pair_form(E, jet, n);
         Residual r;
         r.add(norm_sq(q), norm_sq(twistor(alg, jet)) + 2.0 * t * pair_form(c.fam.C, jet) +
                               t / n * re_inner(D, ric) + t * t * e);
         r.add_scale(grad_norm_sq(jet));
         r.add_scale(t * t * e);
         return r;
       }},
      {{"weyl_gradient_estimate", true, true,
        "|<G(e_k,e_l) nabla_k psi, nabla_l psi>| <= n^2 mu0^2 |nabla psi|^2"},
       [](const IdentityContext& c, const SpinorJet* jp, double) {
         const SpinorJet& jet = need_jet(jp);
         const int n = c.K.dim();
         Residual r;
         r.bound(std::abs(pair_form(all_products(c.fam.B), jet, n)),
                 n * n * c.coordinate_b_sq * grad_norm_sq(jet));
         return r;
       }},
      {{"curvature_gradient_estimate", true, true,
        "|<E(e_k,e_l) nabla_k psi, nabla_l psi>| <= (n/2 C(n,2) sigma)^2 |nabla psi|^2"},
       [](const IdentityContext& c, const SpinorJet* jp, double) {
         const SpinorJet& jet = need_jet(jp);
         const int n = c.K.dim();
         const double f = 0.5 * n * 0.5 * n * (n - 1) * c.sigma;
         Residual r;
         r.bound(std::abs(pair_form(all_products(c.fam.C), jet, n)), f * f * grad_norm_sq(jet));
         return r;
       }},
      {{"ricci_gradient_estimate", true, true,
        "<nabla_{Ric(e_k)} psi, nabla_k psi> <= kappa |nabla psi|^2"},
       [](const IdentityContext& c, const SpinorJet* jp, double) {
         const SpinorJet& jet = need_jet(jp);
         const int n = c.K.dim();
         double lhs = 0.0;
         for (int k = 0; k < n; ++k)
           for (int a = 0; a < n; ++a)
             lhs += c.dec.ricci(k, a) *
                    re_inner(jet.grad[static_cast<size_t>(a)], jet.grad[static_cast<size_t>(k)]);
         Residual r;
         r.bound(lhs, c.kappa * grad_norm_sq(jet));
         return r;
       }},
      {{"spinor_curvature_norm", false, true, "|C(e_i,e_j)|_op <= 1/2 C(n,2) sigma"},
       [](const IdentityContext& c, const SpinorJet*, double) {
         const int n = c.K.dim();
         const double rhs = 0.25 * n * (n - 1) * c.sigma;
         Residual r;
         for (int i = 0; i < n; ++i)
           for (int j = i + 1; j < n; ++j) r.bound(op_norm_skew(c.fam.C(i, j)), rhs);
         return r;
       }},
  };
  return entries;
}

}  // namespace

SpinorJet random_jet(const CliffordAlgebra& alg, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  auto draw = [&] {
    CVector v(alg.spinor_dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double re = normal(gen);
      v(i) = Complex(re, normal(gen));
    }
    return v;
  };
  SpinorJet jet;
  jet.psi = draw();
  for (int k = 0; k < alg.dim(); ++k) jet.grad.push_back(draw());
  return jet;
}

CVector dirac(const CliffordAlgebra& alg, const SpinorJet& jet) {
  CVector d = CVector::Zero(alg.spinor_dim());
  for (int k = 0; k < alg.dim(); ++k) d += alg.gamma(k) * jet.grad[static_cast<size_t>(k)];
  return d;
}

std::vector<CVector> twistor(const CliffordAlgebra& alg, const SpinorJet& jet) {
  const CVector D = dirac(alg, jet);
  const double inv = 1.0 / alg.dim();
  std::vector<CVector> out;
  for (int k = 0; k < alg.dim(); ++k)
    out.push_back(jet.grad[static_cast<size_t>(k)] + inv * (alg.gamma(k) * D));
  return out;
}

std::vector<CVector> modified_twistor(const CliffordAlgebra& alg, const SpinorJet& jet,
                                      const PairFamily& S, double t) {
  std::vector<CVector> out = twistor(alg, jet);
  for (int k = 0; k < alg.dim(); ++k)
    for (int l = 0; l < alg.dim(); ++l)
      out[static_cast<size_t>(k)] -= t * (S(k, l) * jet.grad[static_cast<size_t>(l)]);
  return out;
}

IdentityContext make_identity_context(const CliffordAlgebra& alg, const RiemannTensor& K) {
  if (K.dim() != alg.dim())
    throw Error(ErrorCode::kInvalidArgument, "curvature and Clifford algebra dimensions differ");
  IdentityContext c{&alg, K, decompose(K), {}, 0.0, 0.0, 0.0};
  c.fam = build_endo_family(alg, K, c.dec);
  c.sigma = sigma(curvature_operator(K));
  c.kappa = kappa(c.dec.ricci);
  const int n = K.dim();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      const double v = op_norm_skew(c.fam.B(i, k));
      c.coordinate_b_sq = std::max(c.coordinate_b_sq, v * v);
    }
  return c;
}

const std::vector<IdentityTag>& identity_tags() {
  static const std::vector<IdentityTag> tags = [] {
    std::vector<IdentityTag> t;
    for (const Entry& e : registry()) t.push_back(e.tag);
    return t;
  }();
  return tags;
}

IdentityResult verify_identity(std::string_view tag, const IdentityContext& ctx,
                               const SpinorJet* jet, double t) {
  for (const Entry& e : registry()) {
    if (e.tag.name != tag) continue;
    IdentityResult r;
    r.tag = std::string(tag);
    r.inequality = e.tag.inequality;
    r.residual = std::max(0.0, e.eval(ctx, jet, t).value());
    return r;
  }
  throw Error(ErrorCode::kUnknownId, "unknown identity tag '" + std::string(tag) + "'");
}

double einstein_weyl_residual(const RiemannTensor& K) {
  const CurvatureDecomposition dec = decompose(K);
  const Tensor4& R = K.components();
  const Tensor4& W = dec.weyl.components();
  const int n = K.dim();
  const double c0 = dec.scalar / (n * (n - 1.0));
  double diff = 0.0, scale = 1.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double ww = 0.0, rr = 0.0;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              ww += W(k, l, a, b) * W(k, l, c, d);
              rr += R(k, l, a, b) * R(k, l, c, d);
            }
          const double q = (a == c && b == d ? 1.0 : 0.0) - (a == d && b == c ? 1.0 : 0.0);
          const double rhs = rr - 4.0 * c0 * R(a, b, c, d) + 2.0 * c0 * c0 * q;
          diff = std::max(diff, std::abs(ww - rhs));
          scale = std::max({scale, std::abs(ww), std::abs(rr)});
        }
  return diff / scale;
}

}  // namespace spinbound
