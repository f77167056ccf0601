#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clifford.hpp"
#include "endomorphisms.hpp"
#include "tensor_core.hpp"

namespace spinbound {

// Free first-order jet of a spinor field at a point: psi and grad[k] = nabla_{e_k} psi.
struct SpinorJet {
  CVector psi;
  std::vector<CVector> grad;
};

SpinorJet random_jet(const CliffordAlgebra& alg, uint64_t seed);

// D psi = sum_k gamma_k grad[k]
CVector dirac(const CliffordAlgebra& alg, const SpinorJet& jet);

// Twistor part: grad[k] + (1/n) gamma_k D psi.
std::vector<CVector> twistor(const CliffordAlgebra& alg, const SpinorJet& jet);

// grad[k] + (1/n) gamma_k D psi - t sum_l S(e_k, e_l) grad[l]; S = B gives P^t, S = C gives Q^t.
std::vector<CVector> modified_twistor(const CliffordAlgebra& alg, const SpinorJet& jet,
                                      const PairFamily& S, double t);

// Everything the registry needs about one curvature tensor, computed once.
struct IdentityContext {
  const CliffordAlgebra* alg = nullptr;
  RiemannTensor K;
  CurvatureDecomposition dec;
  EndoFamily fam;
  double sigma = 0.0;
  double kappa = 0.0;
  double coordinate_b_sq = 0.0;  // max_{i<k} |B(e_i, e_k)|_op^2, a lower bound for mu0^2
};

IdentityContext make_identity_context(const CliffordAlgebra& alg, const RiemannTensor& K);

struct IdentityResult {
  std::string tag;
  bool inequality = false;
  // Identities: max |lhs - rhs| divided by max(1, largest term).
  // Inequalities: max(0, lhs - rhs) with the same normalization.
  double residual = 0.0;
};

struct IdentityTag {
  std::string_view name;
  bool needs_jet;
  bool inequality;
  std::string_view statement;
};

const std::vector<IdentityTag>& identity_tags();

// Throws Error(kUnknownId) for an unknown tag and Error(kInvalidArgument) when
// a jet identity is called without a jet. t is the parameter of the modified
// twistor operators.
IdentityResult verify_identity(std::string_view tag, const IdentityContext& ctx,
                               const SpinorJet* jet = nullptr, double t = 0.3);

// sum_kl W_klab W_klcd - [sum_kl K_klab K_klcd - 4R/(n(n-1)) K_abcd
//   + 2R^2/(n^2(n-1)^2)(d_ac d_bd - d_ad d_bc)], max abs entry over max(1, |K|^2).
// Zero for Einstein tensors.
double einstein_weyl_residual(const RiemannTensor& K);

}  // namespace spinbound
