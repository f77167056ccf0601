#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "bounds.hpp"
#include "clifford.hpp"
#include "endomorphisms.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "tensor_core.hpp"

namespace spinbound {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kIdentityTolerance = 1e-9;
constexpr double kGradingTolerance = 1e-10;
constexpr double kChiralityTolerance = 1e-8;
constexpr double kClosedFormTolerance = 1e-6;
constexpr double kScalarFlatTolerance = 1e-10;
constexpr double kDominanceTolerance = 1e-10;
constexpr int kDominanceGrid = 1000;

const std::vector<double> kJetParameters{-1.0, 0.0, 0.3, 0.5, 2.0};

// Collects max residual per (tag, n).
class Table {
 public:
  void add(const std::string& suite, const std::string& tag, int n, const std::string& kind,
           double residual, double tolerance) {
    Key k{suite, tag, n};
    auto it = rows_.find(k);
    if (it == rows_.end()) {
      order_.push_back(k);
      rows_[k] = Row{kind, residual, tolerance};
    } else {
      it->second.max = std::max(it->second.max, residual);
    }
  }

  bool passed() const {
    for (const auto& [k, r] : rows_)
      if (!(r.max <= r.tolerance)) return false;
    return true;
  }

  ojson to_json() const {
    ojson out = ojson::array();
    for (const Key& k : order_) {
      const Row& r = rows_.at(k);
      ojson j;
      j["suite"] = k.suite;
      j["tag"] = k.tag;
      j["n"] = k.n;
      j["kind"] = r.kind;
      j["max_residual"] = r.max;
      j["tolerance"] = r.tolerance;
      j["pass"] = r.max <= r.tolerance;
      out.push_back(j);
    }
    return out;
  }

 private:
  struct Key {
    std::string suite, tag;
    int n;
    bool operator<(const Key& o) const {
      return std::tie(suite, tag, n) < std::tie(o.suite, o.tag, o.n);
    }
  };
  struct Row {
    std::string kind;
    double max = 0.0;
    double tolerance = 0.0;
  };
  std::vector<Key> order_;
  std::map<Key, Row> rows_;
};

uint64_t trial_seed(uint64_t seed, uint64_t stream, int n, int trial) {
  return derive_seed(derive_seed(seed, stream), static_cast<uint64_t>(n) * 100000u + trial);
}

void identities_suite(const VerifyOptions& opt, Table& table) {
  for (int n : opt.dims) {
    const CliffordAlgebra alg = CliffordAlgebra::build(n);
    for (int trial = 0; trial < opt.trials; ++trial) {
      const RiemannTensor K = random_curvature(n, trial_seed(opt.seed, 1, n, trial));
      const IdentityContext ctx = make_identity_context(alg, K);
      const SpinorJet jet = random_jet(alg, trial_seed(opt.seed, 2, n, trial));
      for (const IdentityTag& tag : identity_tags()) {
        const std::string kind = tag.inequality ? "inequality" : "identity";
        if (!tag.needs_jet) {
          const IdentityResult r = verify_identity(tag.name, ctx);
          table.add("identities", r.tag, n, kind, r.residual, kIdentityTolerance);
          continue;
        }
        for (double t : kJetParameters) {
          const IdentityResult r = verify_identity(tag.name, ctx, &jet, t);
          table.add("identities", r.tag, n, kind, r.residual, kIdentityTolerance);
        }
      }
    }
  }
}

double max_entry(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void grading_suite(const VerifyOptions& opt, Table& table) {
  for (int n : opt.dims) {
    const CliffordAlgebra alg = CliffordAlgebra::build(n);
    for (int trial = 0; trial < opt.trials; ++trial) {
      const RiemannTensor K = random_curvature(n, trial_seed(opt.seed, 3, n, trial));
      const CurvatureDecomposition dec = decompose(K);
      const CMatrix H = h_endo(alg, dec.weyl);
      const HGrading g = h_grading(alg, H);
      const double scale = std::max(1.0, max_entry(H));
      table.add("grading", "h2_vanishes", n, "identity", g.h2_norm / scale, kGradingTolerance);
      table.add("grading", "h0_weyl_norm", n, "identity",
                std::abs(g.h0 - dec.weyl_norm_sq / 8.0) / std::max(1.0, dec.weyl_norm_sq / 8.0),
                kGradingTolerance);
      table.add("grading", "grading_sum", n, "identity",
                max_entry(g.h0 * alg.identity() + g.h4 - H) / scale, kGradingTolerance);
      table.add("grading", "h4_formula", n, "identity",
                max_entry(g.h4 - h4_formula(alg, dec.weyl)) / scale, kIdentityTolerance);
      if (n == 4) {
        const Nu0Result nu = nu0(alg, H, true);
        const double formula = 0.25 * std::min(selfdual_norm_sq(dec.weyl, +1),
                                               selfdual_norm_sq(dec.weyl, -1));
        table.add("grading", "chirality_formula", n, "identity",
                  std::abs(nu.nu0 - formula) / std::max(formula, 1e-300), kChiralityTolerance);
      }
    }
  }
}

double family_excess(const std::function<double(double)>& f, double value, double lo,
                     double hi, bool symmetric) {
  double worst = 0.0;
  for (int i = 0; i < kDominanceGrid; ++i) {
    const double u = static_cast<double>(i) / (kDominanceGrid - 1);
    double p = lo * std::pow(hi / lo, u);
    if (symmetric && i % 2) p = -p;
    worst = std::max(worst, (f(p) - value) / std::max(1.0, std::abs(value)));
  }
  return worst;
}

ojson discrepancy_entry(const std::string& bound, int n, int trial, const ClosedVsNumeric& c) {
  ojson j;
  j["bound"] = bound;
  j["n"] = n;
  j["trial"] = trial;
  j["closed_form"] = c.closed ? ojson(*c.closed) : ojson(nullptr);
  j["numeric_supremum"] = c.numeric;
  j["relative_difference"] = c.relative_difference ? ojson(*c.relative_difference) : ojson(nullptr);
  j["operative"] = c.operative_source;
  return j;
}

// 0 when a mismatch beyond tolerance is always reported with the supremum as
// the operative value, 1 for a silent disagreement.
double protocol_violation(const ClosedVsNumeric& c) {
  if (!c.closed) return c.operative_source == "numeric_supremum" ? 0.0 : 1.0;
  const double rel = relative_difference(*c.closed, c.numeric);
  if (rel <= kClosedFormTolerance) return 0.0;
  return c.discrepancy && c.operative_source == "numeric_supremum" && c.operative == c.numeric
             ? 0.0
             : 1.0;
}

void bounds_suite(const VerifyOptions& opt, Table& table, ojson& discrepancies,
                  std::map<std::string, int>& counts) {
  for (int n : opt.dims) {
    for (int trial = 0; trial < opt.trials; ++trial) {
      const SpectralSummary s = random_summary(n, opt.seed, trial);

      // t-family
      const double closed = weyl_bound(s);
      const Supremum sup = family_t_supremum(s);
      table.add("bounds-consistency", "weyl_closed_vs_supremum", n, "identity",
                relative_difference(closed, sup.value), kClosedFormTolerance);
      const double tscale = 1.0 / (n * std::sqrt(n * s.mu0_sq));
      table.add("bounds-consistency", "weyl_dominates_family", n, "inequality",
                family_excess([&](double t) { return bound_family_t(s, t); }, closed,
                              1e-6 * tscale, 1e6 * tscale, true),
                kDominanceTolerance);
      if (s.R0 == 0.0) {
        table.add("bounds-consistency", "weyl_scalar_flat_vs_weyl", n, "identity",
                  relative_difference(*weyl_bound_scalar_flat(s), closed), kScalarFlatTolerance);
      }
      if (s.R0 < 0.0) {
        const bool condition = s.nu0 > 0.5 * n * std::abs(s.R0) * std::sqrt(s.mu0_sq);
        table.add("bounds-consistency", "weyl_positivity_criterion", n, "identity",
                  condition == (closed > 0.0) ? 0.0 : 1.0, 0.0);
      }

      // s-family
      const HarmonicConstants c = harmonic_constants(s);
      const ClosedVsNumeric h = harmonic_bound(s, c);
      table.add("bounds-consistency", "harmonic_protocol", n, "identity", protocol_violation(h),
                0.0);
      const double sscale = 1.0 / std::sqrt(c.b);
      table.add("bounds-consistency", "harmonic_dominates_family", n, "inequality",
                family_excess([&](double p) { return bound_family_s(s, c, p); }, h.operative,
                              1e-6 * sscale, 1e6 * sscale, false),
                kDominanceTolerance);
      ++counts[h.discrepancy ? "harmonic_discrepancies" : "harmonic_agreements"];
      if (h.discrepancy) discrepancies.push_back(discrepancy_entry("harmonic", n, trial, h));

      if (s.R0 == 0.0) {
        const ClosedVsNumeric z = harmonic_bound_scalar_flat(s, c);
        table.add("bounds-consistency", "harmonic_scalar_flat_protocol", n, "identity",
                  protocol_violation(z), 0.0);
        ++counts[z.discrepancy ? "harmonic_scalar_flat_discrepancies"
                               : "harmonic_scalar_flat_agreements"];
        if (z.discrepancy)
          discrepancies.push_back(discrepancy_entry("harmonic_scalar_flat", n, trial, z));
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"identities", "grading", "bounds-consistency", "all"};
  return s;
}

SpectralSummary random_summary(int n, uint64_t seed, int trial) {
  std::mt19937_64 gen(trial_seed(seed, 4, n, trial));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SpectralSummary s;
  s.n = n;
  s.samples = 1;
  s.sigma = 0.2 + 1.8 * u(gen);
  const double top = (n - 1) * s.sigma;
  s.R0 = trial % 4 == 0 ? 0.0 : (2.0 * u(gen) - 1.0) * 0.5 * n * top;
  s.R_max = s.R0;
  const double mean = s.R0 / n;
  s.kappa = mean + u(gen) * (top - mean);
  s.ric_dev0_sq = (s.kappa - mean) * (s.kappa - mean) * n / (n - 1.0) * (1.0 + 2.0 * u(gen));
  s.ric0_sq = s.ric_dev0_sq + s.R0 * s.R0 / n;
  s.mu0_sq = (0.01 + 0.99 * u(gen)) * s.sigma * s.sigma;
  s.nu0 = 2.0 * u(gen) * n * std::sqrt(s.mu0_sq) * s.sigma;
  s.einstein = s.ric_dev0_sq == 0.0;
  return s;
}

VerifyOutcome run_verify(const VerifyOptions& opt) {
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), opt.suite) == suites.end())
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + opt.suite + "'");
  if (opt.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  if (opt.dims.empty()) throw Error(ErrorCode::kInvalidArgument, "no dimensions given");
  for (int n : opt.dims)
    if (n < CliffordAlgebra::kMinDim || n > CliffordAlgebra::kMaxDim)
      throw Error(ErrorCode::kInvalidArgument,
                  "dimension " + std::to_string(n) + " outside the supported range 4..8");

  Table table;
  ojson discrepancies = ojson::array();
  std::map<std::string, int> counts;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "identities") identities_suite(opt, table);
  if (all || opt.suite == "grading") grading_suite(opt, table);
  if (all || opt.suite == "bounds-consistency") bounds_suite(opt, table, discrepancies, counts);

  VerifyOutcome out;
  out.passed = table.passed();
  ojson& d = out.doc;
  d["convention_version"] = kConventionVersion;
  d["suite"] = opt.suite;
  d["dims"] = opt.dims;
  d["trials"] = opt.trials;
  d["seed"] = opt.seed;
  d["results"] = table.to_json();
  if (all || opt.suite == "bounds-consistency") {
    ojson c = ojson::object();
    for (const auto& [k, v] : counts) c[k] = v;
    d["comparison_counts"] = c;
    d["discrepancies"] = discrepancies;
  }
  d["pass"] = out.passed;
  return out;
}

}  // namespace spinbound
