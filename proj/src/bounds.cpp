#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace spinbound {

namespace {

constexpr int kGridPerSide = 401;
constexpr double kGridDecades = 8.0;
constexpr double kParamTolerance = 1e-10;
constexpr double kPositiveTolerance = 1e-10;
constexpr double kConstantSpread = 1e-8;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Supremum golden_section(const std::function<double(double)>& f, double lo, double hi,
                        double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  Supremum s;
  s.argmax = fc >= fd ? c : d;
  s.value = std::max(fc, fd);
  return s;
}

Supremum refine_on_grid(const std::function<double(double)>& f, const std::vector<double>& grid,
                        double scale, double limit) {
  std::vector<double> values(grid.size());
  size_t best = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    values[i] = f(grid[i]);
    if (values[i] > values[best]) best = i;
  }
  Supremum s{values[best], grid[best], false};
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  if (hi > lo) {
    const double tol = kParamTolerance * std::max(scale, std::abs(grid[best]));
    Supremum g = golden_section(f, lo, hi, tol);
    if (g.value > s.value) s = g;
  }
  if (limit > s.value) {
    s.value = limit;
    s.argmax = std::numeric_limits<double>::infinity();
    s.at_infinity = true;
  }
  return s;
}

std::vector<double> log_grid(double scale, double upper) {
  std::vector<double> g;
  g.reserve(kGridPerSide);
  for (int i = 0; i < kGridPerSide; ++i) {
    const double u = -kGridDecades + 2.0 * kGridDecades * i / (kGridPerSide - 1);
    const double v = scale * std::pow(10.0, u);
    if (upper > 0.0 && v >= upper) break;
    g.push_back(v);
  }
  return g;
}

HarmonicConstants constants_at(const SpectralSummary& s, double R, double ric_dev_sq) {
  const int n = s.n;
  HarmonicConstants c;
  c.R = R;
  c.a = 4.0 * n * (n - 1) * s.nu0 + (n - 1.0) * (n + 2.0) / (n - 2.0) * ric_dev_sq -
        R * (s.kappa - R / n);
  const double C = binomial2(n);
  c.b = 0.5 * n * n * C * C * C * s.sigma * s.sigma;
  const double disc = c.b * c.b * R * R + c.a * c.b * (c.a + R * s.kappa);
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    c.A_plus = root + c.b * R;
    c.A_minus = root - c.b * R;
  }
  return c;
}

// Largest s in (0, inf) below which 1 + kappa s + b s^2 stays positive, or 0 if none.
double family_pole(double kappa, double b) {
  if (kappa >= 0.0) return 0.0;
  if (b == 0.0) return -1.0 / kappa;
  const double disc = kappa * kappa - 4.0 * b;
  if (disc < 0.0) return 0.0;
  return (-kappa - std::sqrt(disc)) / (2.0 * b);
}

ClosedVsNumeric compare(std::optional<double> closed, const Supremum& sup) {
  ClosedVsNumeric r;
  r.closed = closed;
  r.numeric = sup.value;
  r.numeric_at_infinity = sup.at_infinity;
  r.argmax = sup.argmax;
  if (closed) {
    r.relative_difference = relative_difference(*closed, sup.value);
    r.discrepancy = *r.relative_difference > kAgreementTolerance;
  }
  if (closed && !r.discrepancy) {
    r.operative = *closed;
    r.operative_source = "closed_form";
  } else {
    r.operative = sup.value;
    r.operative_source = "numeric_supremum";
  }
  return r;
}

}  // namespace

double friedrich_bound(int n, double R0) { return n * R0 / (4.0 * (n - 1)); }

double bound_family_t(const SpectralSummary& s, double t) {
  const int n = s.n;
  const double m2 = s.mu0_sq;
  const double num = s.R0 + 4.0 * s.nu0 * t + n * n * s.R0 * m2 * t * t;
  const double den = (n - 1.0) + static_cast<double>(n) * n * n * m2 * t * t;
  return n / 4.0 * num / den;
}

double weyl_bound(const SpectralSummary& s) { return weyl_bound(s, s.nu0); }

double weyl_bound(const SpectralSummary& s, double nu) {
  const int n = s.n;
  const double base = friedrich_bound(n, s.R0);
  if (s.mu0_sq <= 0.0) return base;
  const double X = 16.0 * (n - 1) * nu * nu / (n * s.mu0_sq);
  const double R = s.R0;
  const double root = std::sqrt(R * R + X);
  // root - R without cancellation for R > 0
  const double diff = R > 0.0 ? X / (root + R) : root - R;
  return base + diff / (8.0 * (n - 1));
}

std::optional<double> weyl_bound_scalar_flat(const SpectralSummary& s) {
  if (s.mu0_sq <= 0.0) return std::nullopt;
  const int n = s.n;
  return s.nu0 / (2.0 * std::sqrt(s.mu0_sq) * std::sqrt(n * (n - 1.0)));
}

HarmonicConstants harmonic_constants(const SpectralSummary& s) {
  const double spread = s.R_max - s.R0;
  if (spread > kConstantSpread * std::max(1.0, std::abs(s.R0))) {
    throw Error(ErrorCode::kValidation,
                "scalar curvature is not constant over the samples (spread " + fmt(spread) + ")");
  }
  return constants_at(s, s.R0, s.ric_dev0_sq);
}

double bound_family_s(const SpectralSummary& s, const HarmonicConstants& c, double param) {
  const int n = s.n;
  const double den = 1.0 + s.kappa * param + c.b * param * param;
  return friedrich_bound(n, c.R) + param / (4.0 * (n - 1)) * (c.a - c.b * c.R * param) / den;
}

Supremum supremum_over_line(const std::function<double(double)>& f, double scale,
                            double limit) {
  const std::vector<double> pos = log_grid(scale, 0.0);
  std::vector<double> grid;
  grid.reserve(2 * pos.size() + 1);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) grid.push_back(-*it);
  grid.push_back(0.0);
  grid.insert(grid.end(), pos.begin(), pos.end());
  return refine_on_grid(f, grid, scale, limit);
}

Supremum supremum_over_halfline(const std::function<double(double)>& f, double scale,
                                double limit, double upper) {
  std::vector<double> grid{0.0};
  for (double v : log_grid(scale, upper)) grid.push_back(v);
  return refine_on_grid(f, grid, scale, upper > 0.0 ? -std::numeric_limits<double>::infinity()
                                                    : limit);
}

double relative_difference(double x, double y) {
  const double d = std::abs(x - y);
  if (d == 0.0) return 0.0;
  return d / std::max(std::abs(x), std::abs(y));
}

Supremum family_t_supremum(const SpectralSummary& s) {
  if (s.mu0_sq <= 0.0) return Supremum{friedrich_bound(s.n, s.R0), 0.0, false};
  const double n = s.n;
  const double scale = 1.0 / (n * std::sqrt(n) * std::sqrt(s.mu0_sq));
  return supremum_over_line([&](double t) { return bound_family_t(s, t); }, scale, s.R0 / 4.0);
}

Supremum family_s_supremum(const SpectralSummary& s, const HarmonicConstants& c) {
  const double pole = family_pole(s.kappa, c.b);
  if (pole > 0.0) {
    throw Error(ErrorCode::kValidation,
                "inconsistent summary: 1 + kappa s + b s^2 vanishes at s = " + fmt(pole) +
                    " (kappa^2 >= 4b with kappa < 0 is impossible for curvature data)");
  }
  if (c.b == 0.0) {
    if (c.a != 0.0 || s.kappa != 0.0)
      throw Error(ErrorCode::kValidation, "inconsistent summary: sigma = 0 but a or kappa nonzero");
    return Supremum{friedrich_bound(s.n, c.R), 0.0, false};
  }
  return supremum_over_halfline([&](double p) { return bound_family_s(s, c, p); },
                                1.0 / std::sqrt(c.b), c.R / 4.0);
}

ClosedVsNumeric harmonic_bound(const SpectralSummary& s, const HarmonicConstants& c) {
  if (c.a == 0.0 && c.b == 0.0)
    throw Error(ErrorCode::kInvalidArgument, "harmonic_bound: flat input (a = b = 0)");
  const Supremum sup = family_s_supremum(s, c);
  std::optional<double> closed;
  std::string note;
  if (!c.A_plus || !c.A_minus) {
    note = "closed form undefined: b^2 R^2 + ab(a + R kappa) < 0";
  } else {
    const double den = 2.0 * c.a * c.b + s.kappa * *c.A_plus;
    if (den == 0.0) {
      note = "closed form degenerate: 2ab + kappa A_plus = 0";
    } else {
      closed = friedrich_bound(s.n, c.R) + c.a / (4.0 * (s.n - 1)) * *c.A_minus / den;
    }
  }
  ClosedVsNumeric r = compare(closed, sup);
  r.note = note;
  if (r.discrepancy)
    r.note = "closed form differs from the supremum of the family by " +
             fmt(*r.relative_difference) + " (relative); supremum used";
  return r;
}

ClosedVsNumeric harmonic_bound_scalar_flat(const SpectralSummary& s, const HarmonicConstants& c) {
  const int n = s.n;
  const double C = binomial2(n);
  const double den = 4.0 * (n - 2) * (s.kappa + C * s.sigma * std::sqrt(n * (n - 1.0)));
  if (den == 0.0) throw Error(ErrorCode::kNumeric, "harmonic_bound_scalar_flat: zero denominator");
  const double closed = ((n + 2.0) * s.ric0_sq + 4.0 * n * (n - 2.0) * s.nu0) / den;
  HarmonicConstants at_zero = c;
  if (c.R != 0.0) at_zero = constants_at(s, 0.0, s.ric0_sq);
  if (at_zero.a == 0.0 && at_zero.b == 0.0) {
    ClosedVsNumeric r = compare(closed, Supremum{0.0, 0.0, false});
    r.note = "flat input";
    return r;
  }
  ClosedVsNumeric r = compare(closed, family_s_supremum(s, at_zero));
  if (r.discrepancy)
    r.note = "formula differs from the R = 0 supremum of the family by " +
             fmt(*r.relative_difference) + " (relative); supremum used";
  return r;
}

std::vector<Flag> obstruction_flags(const SpectralSummary& s, const Metadata& meta) {
  const int n = s.n;
  const double C = binomial2(n);
  const bool base = meta.compact && meta.spin;
  const bool weyl_ok = meta.divergence_free_weyl || meta.divergence_free_curvature || s.einstein;
  const double Rabs = std::abs(s.R0);
  const bool R_nonpositive = s.R_max <= kPositiveTolerance;
  std::vector<Flag> flags;

  auto push = [&](std::string name, bool pre, double margin, std::string detail) {
    Flag f;
    f.name = std::move(name);
    f.prerequisites = pre;
    f.margin = margin;
    f.condition = margin > kPositiveTolerance;
    f.asserted = pre && f.condition;
    f.detail = std::move(detail);
    flags.push_back(std::move(f));
  };

  push("weyl_bound_positive_negative_R0",
       base && weyl_ok && s.R0 < 0.0,
       s.nu0 - 0.5 * n * Rabs * std::sqrt(s.mu0_sq),
       "nu0 > (n/2)|R0| mu0; needs compact, spin, divergence-free Weyl and R0 < 0");

  push("no_harmonic_spinors_ricci_flat",
       base && s.ricci_flat,
       s.nu0,
       "nu0 > 0 on a compact Ricci-flat spin manifold");

  push("no_harmonic_spinors_conformally_ricci_flat",
       base && meta.conformally_ricci_flat,
       s.nu0,
       "nu0 > 0 on a compact conformally Ricci-flat spin manifold");

  const double lhs51 = (n + 2.0) / (n - 2.0) * s.ric_dev0_sq + s.R0 * s.R0 / (n * (n - 1.0)) +
                       4.0 * n * s.nu0;
  const double rhs51 = Rabs * (s.kappa + n * n * C * s.sigma);
  push("no_harmonic_spinors_divergence_free_curvature",
       base && meta.divergence_free_curvature && R_nonpositive,
       lhs51 - rhs51,
       "(n+2)/(n-2)|Ric-R/n|_0^2 + R^2/(n(n-1)) + 4n nu0 > |R|(kappa + n^2 C(n,2) sigma); "
       "needs compact, spin, divergence-free curvature and R <= 0");

  const double a = 4.0 * n * (n - 1) * s.nu0 + (n - 1.0) * (n + 2.0) / (n - 2.0) * s.ric_dev0_sq -
                   s.R0 * (s.kappa - s.R0 / n);
  const bool flat = s.ricci_flat && s.sigma == 0.0;
  push("harmonic_bound_positive_nonpositive_R",
       base && meta.divergence_free_curvature && R_nonpositive && !flat,
       a + s.R0 * s.kappa - (n - 1.0) * Rabs * (s.kappa + n * n * C * s.sigma),
       "a + R kappa > (n-1)|R|(kappa + n^2 C(n,2) sigma); needs compact, spin, "
       "divergence-free curvature, R <= 0 and a non-flat metric");
  return flags;
}

BoundReport evaluate_bounds(const SpectralSummary& s, const Metadata& meta) {
  const int n = s.n;
  const bool base = meta.compact && meta.spin;
  BoundReport r;
  r.weyl_free = s.mu0_sq <= 0.0;

  r.friedrich.value = friedrich_bound(n, s.R0);
  r.friedrich.applicable = base;
  if (!base) r.friedrich.notes.push_back("requires a compact spin manifold");

  const bool weyl_ok = meta.divergence_free_weyl || meta.divergence_free_curvature || s.einstein;
  r.weyl.value = weyl_bound(s);
  r.weyl.applicable = base && weyl_ok;
  if (!weyl_ok) r.weyl.notes.push_back("requires divergence-free Weyl tensor");
  if (s.einstein && !meta.divergence_free_weyl)
    r.weyl.notes.push_back("Einstein samples imply divergence-free Weyl tensor");
  if (r.weyl_free) r.weyl.notes.push_back("conformally flat input: mu0 = 0, Weyl term set to 0");
  if (s.nu0_plus) r.weyl_plus = weyl_bound(s, *s.nu0_plus);
  if (s.nu0_minus) r.weyl_minus = weyl_bound(s, *s.nu0_minus);

  const bool R_zero = std::abs(s.R0) <= kPositiveTolerance && std::abs(s.R_max) <= kPositiveTolerance;
  r.weyl_scalar_flat.applicable = base && weyl_ok && R_zero;
  if (!R_zero) {
    r.weyl_scalar_flat.notes.push_back("requires vanishing scalar curvature");
  } else if (r.weyl_free) {
    r.weyl_scalar_flat.notes.push_back("undefined for mu0 = 0");
  } else {
    r.weyl_scalar_flat.value = weyl_bound_scalar_flat(s);
  }

  const bool flat = s.ricci_flat && s.sigma == 0.0;
  r.harmonic.strict = true;
  r.harmonic_scalar_flat.strict = true;
  HarmonicConstants c;
  try {
    c = harmonic_constants(s);
    r.constants = c;
  } catch (const Error& e) {
    r.harmonic.notes.push_back(e.what());
    r.harmonic_scalar_flat.notes.push_back(e.what());
    r.flags = obstruction_flags(s, meta);
    return r;
  }

  r.harmonic.applicable = base && meta.divergence_free_curvature && !flat;
  if (!meta.divergence_free_curvature) r.harmonic.notes.push_back("requires divergence-free curvature");
  if (flat) {
    r.harmonic.notes.push_back("requires a non-flat metric");
  } else {
    try {
      r.harmonic_detail = harmonic_bound(s, c);
      r.harmonic.value = r.harmonic_detail->operative;
    } catch (const Error& e) {
      r.harmonic.notes.push_back(e.what());
    }
  }

  const bool nonzero = s.nu0 > kPositiveTolerance || s.ric0_sq > kPositiveTolerance;
  r.harmonic_scalar_flat.applicable = base && meta.divergence_free_curvature && R_zero && nonzero;
  if (!R_zero) r.harmonic_scalar_flat.notes.push_back("requires vanishing scalar curvature");
  if (!nonzero) r.harmonic_scalar_flat.notes.push_back("inapplicable: both numbers zero");
  if (R_zero) {
    try {
      r.harmonic_scalar_flat_detail = harmonic_bound_scalar_flat(s, c);
      r.harmonic_scalar_flat.value = r.harmonic_scalar_flat_detail->operative;
    } catch (const Error& e) {
      r.harmonic_scalar_flat.notes.push_back(e.what());
    }
  }

  r.flags = obstruction_flags(s, meta);
  return r;
}

}  // namespace spinbound
