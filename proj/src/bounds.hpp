#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectral.hpp"

namespace spinbound {

// Global facts that cannot be computed from pointwise samples.
struct Metadata {
  bool compact = false;
  bool spin = false;
  bool divergence_free_weyl = false;
  bool divergence_free_curvature = false;
  bool symmetric_space = false;
  bool conformally_ricci_flat = false;
};

inline double binomial2(int n) { return 0.5 * n * (n - 1); }

double friedrich_bound(int n, double R0);

// lambda^2 >= n/4 (R0 + 4 nu0 t + n^2 R0 mu0^2 t^2) / ((n-1) + n^3 mu0^2 t^2), any real t.
double bound_family_t(const SpectralSummary& s, double t);

// Supremum of bound_family_t over t in closed form,
//   nR0/(4(n-1)) + (sqrt(R0^2 + 16(n-1) nu^2/(n mu^2)) - R0) / (8(n-1)),
// which is the rationalized form of nR0/(4(n-1)) + 2nu^2/(n mu^2 (R0 + sqrt(...))).
// For mu0 = 0 the Weyl tensor vanishes and the value is the Friedrich bound.
double weyl_bound(const SpectralSummary& s);
double weyl_bound(const SpectralSummary& s, double nu);

// nu0 / (2 mu0 sqrt(n(n-1))), the R0 = 0 case of weyl_bound. Empty when mu0 = 0.
std::optional<double> weyl_bound_scalar_flat(const SpectralSummary& s);

struct HarmonicConstants {
  double R = 0.0;
  double a = 0.0;
  double b = 0.0;
  // Empty when b^2 R^2 + ab(a + R kappa) < 0.
  std::optional<double> A_plus, A_minus;
};

// Requires constant scalar curvature over the samples (spread <= 1e-8 relative),
// throws Error(kValidation) otherwise.
HarmonicConstants harmonic_constants(const SpectralSummary& s);

// nR/(4(n-1)) + s/(4(n-1)) (a - bRs)/(1 + kappa s + b s^2), s >= 0.
double bound_family_s(const SpectralSummary& s, const HarmonicConstants& c, double param);

struct Supremum {
  double value = 0.0;
  double argmax = 0.0;
  bool at_infinity = false;  // approached only as the parameter diverges
};

// Coarse log-spaced grid, then golden-section refinement of the bracketing
// interval to 1e-10 relative in the parameter. `scale` sets the grid centre.
// `limit` is the value approached at +-infinity.
Supremum supremum_over_line(const std::function<double(double)>& f, double scale, double limit);
Supremum supremum_over_halfline(const std::function<double(double)>& f, double scale,
                                double limit, double upper = 0.0);

// Numeric suprema of the two families; the s-family throws Error(kValidation)
// when its denominator can vanish for s >= 0 (impossible for curvature data).
Supremum family_t_supremum(const SpectralSummary& s);
Supremum family_s_supremum(const SpectralSummary& s, const HarmonicConstants& c);

inline constexpr double kAgreementTolerance = 1e-6;

// A closed form next to the numeric supremum of the family it claims to
// maximize. When they differ by more than 1e-6 relative the supremum is used.
struct ClosedVsNumeric {
  std::optional<double> closed;
  double numeric = 0.0;
  bool numeric_at_infinity = false;
  double argmax = 0.0;
  std::optional<double> relative_difference;
  bool discrepancy = false;
  double operative = 0.0;
  std::string operative_source;  // "closed_form" or "numeric_supremum"
  std::string note;
};

double relative_difference(double x, double y);

ClosedVsNumeric harmonic_bound(const SpectralSummary& s, const HarmonicConstants& c);

// Scalar-flat formula ((n+2)|Ric|_0^2 + 4n(n-2)nu0) / (4(n-2)(kappa + C(n,2) sigma sqrt(n(n-1))))
// against the R = 0 supremum of bound_family_s.
ClosedVsNumeric harmonic_bound_scalar_flat(const SpectralSummary& s, const HarmonicConstants& c);

struct Flag {
  std::string name;
  bool prerequisites = false;  // metadata and sign conditions
  bool condition = false;      // the numeric inequality
  bool asserted = false;       // prerequisites && condition
  double margin = 0.0;         // lhs - rhs of the inequality
  std::string detail;
};

std::vector<Flag> obstruction_flags(const SpectralSummary& s, const Metadata& meta);

struct BoundValue {
  std::optional<double> value;
  bool applicable = false;
  bool strict = false;
  std::vector<std::string> notes;
};

struct BoundReport {
  BoundValue friedrich;
  BoundValue weyl;
  std::optional<double> weyl_plus, weyl_minus;
  BoundValue weyl_scalar_flat;
  std::optional<HarmonicConstants> constants;
  BoundValue harmonic;
  std::optional<ClosedVsNumeric> harmonic_detail;
  BoundValue harmonic_scalar_flat;
  std::optional<ClosedVsNumeric> harmonic_scalar_flat_detail;
  std::vector<Flag> flags;
  bool weyl_free = false;  // mu0 = 0
};

BoundReport evaluate_bounds(const SpectralSummary& s, const Metadata& meta);

}  // namespace spinbound
