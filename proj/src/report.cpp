#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "clifford.hpp"
#include "spectral.hpp"

namespace spinbound {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kSharpTolerance = 1e-12;
constexpr double kSpectrumSlack = 1e-9;

ojson opt_num(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

ojson bound_json(const BoundValue& b) {
  ojson j;
  j["value"] = opt_num(b.value);
  j["applicable"] = b.applicable;
  j["strict"] = b.strict;
  j["notes"] = b.notes;
  return j;
}

void add_comparison(ojson& j, const std::optional<ClosedVsNumeric>& d) {
  if (!d) return;
  j["closed_form"] = opt_num(d->closed);
  j["numeric_supremum"] = d->numeric;
  j["numeric_at_infinity"] = d->numeric_at_infinity;
  j["argmax"] = d->numeric_at_infinity ? ojson(nullptr) : ojson(d->argmax);
  j["relative_difference"] = opt_num(d->relative_difference);
  j["discrepancy"] = d->discrepancy;
  j["operative_source"] = d->operative_source;
  if (!d->note.empty()) j["notes"].push_back(d->note);
}

ojson sample_json(const PointQuantities& q) {
  ojson j;
  j["scalar"] = q.scalar;
  j["ric_dev_sq"] = q.ric_dev_sq;
  j["ric_sq"] = q.ric_sq;
  j["weyl_norm_sq"] = q.weyl_norm_sq;
  j["nu"] = q.nu;
  j["nu_plus"] = opt_num(q.nu_plus);
  j["nu_minus"] = opt_num(q.nu_minus);
  j["mu0_sq"] = q.mu0_sq;
  j["mu0_certificate_gap"] = q.mu0_gap;
  j["sigma"] = q.sigma;
  j["kappa"] = q.kappa;
  j["einstein"] = q.einstein;
  j["ricci_flat"] = q.ricci_flat;
  return j;
}

void emit(std::string& out, const ojson& v, int depth) {
  const std::string pad(static_cast<size_t>(2 * depth), ' ');
  const std::string inner(static_cast<size_t>(2 * (depth + 1)), ' ');
  switch (v.type()) {
    case ojson::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, val] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + ojson(key).dump() + ": ";
        emit(out, val, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case ojson::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        emit(out, v[i], depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case ojson::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      // keep a float a float after parsing
      if (std::string(buf).find_first_of(".eEn") == std::string::npos) out += ".0";
      return;
    }
    default:
      out += v.dump();
  }
}

void flatten(std::ostringstream& os, const std::string& path, const ojson& v) {
  if (v.is_object()) {
    if (v.empty()) os << path << " = {}\n";
    for (const auto& [key, val] : v.items()) flatten(os, path.empty() ? key : path + "." + key, val);
    return;
  }
  if (v.is_array()) {
    if (v.empty()) os << path << " = []\n";
    for (size_t i = 0; i < v.size(); ++i) flatten(os, path + "[" + std::to_string(i) + "]", v[i]);
    return;
  }
  os << path << " = ";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    os << buf;
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
  os << "\n";
}

}  // namespace

ojson run_report(const CurvatureInput& in, const ReportOptions& opt) {
  const CliffordAlgebra alg = CliffordAlgebra::build(in.n);
  PointOptions popt;
  popt.chiral = opt.chiral;
  popt.mu0.restarts = opt.restarts;
  popt.mu0.seed = opt.seed;

  std::vector<PointQuantities> points;
  for (const RiemannTensor& K : in.samples) points.push_back(point_quantities(alg, K, popt));
  const SpectralSummary s = summarize(in.n, points);

  Metadata meta = in.meta;
  std::vector<std::string> derived;
  if (meta.symmetric_space && !meta.divergence_free_curvature) {
    meta.divergence_free_curvature = true;
    derived.push_back("divergence_free_curvature: symmetric space");
  }
  if (meta.divergence_free_curvature && !meta.divergence_free_weyl) {
    meta.divergence_free_weyl = true;
    derived.push_back("divergence_free_weyl: divergence-free curvature");
  }
  if (s.einstein && !meta.divergence_free_weyl) {
    meta.divergence_free_weyl = true;
    derived.push_back("divergence_free_weyl: Einstein at every sample");
  }
  const BoundReport b = evaluate_bounds(s, meta);

  ojson doc;
  doc["convention_version"] = kConventionVersion;
  doc["input"] = in.echo;
  doc["options"] = {{"chiral", opt.chiral}, {"restarts", opt.restarts}, {"seed", opt.seed}};

  ojson m;
  m["compact"] = meta.compact;
  m["spin"] = meta.spin;
  m["divergence_free_weyl"] = meta.divergence_free_weyl;
  m["divergence_free_curvature"] = meta.divergence_free_curvature;
  m["symmetric_space"] = meta.symmetric_space;
  m["conformally_ricci_flat"] = meta.conformally_ricci_flat;
  m["derived"] = derived;
  doc["metadata"] = m;

  ojson sm;
  sm["n"] = s.n;
  sm["samples"] = s.samples;
  sm["nu0"] = s.nu0;
  sm["nu0_plus"] = opt_num(s.nu0_plus);
  sm["nu0_minus"] = opt_num(s.nu0_minus);
  sm["mu0_sq"] = s.mu0_sq;
  sm["mu0_certificate_gap"] = s.mu0_gap;
  sm["sigma"] = s.sigma;
  sm["kappa"] = s.kappa;
  sm["R0"] = s.R0;
  sm["R_max"] = s.R_max;
  sm["ric_dev0_sq"] = s.ric_dev0_sq;
  sm["ric0_sq"] = s.ric0_sq;
  sm["einstein"] = s.einstein;
  sm["ricci_flat"] = s.ricci_flat;
  doc["summary"] = sm;

  ojson samples = ojson::array();
  for (const PointQuantities& q : points) samples.push_back(sample_json(q));
  doc["samples"] = samples;

  ojson bj;
  bj["friedrich"] = bound_json(b.friedrich);
  ojson w = bound_json(b.weyl);
  if (opt.chiral) {
    w["value_plus"] = opt_num(b.weyl_plus);
    w["value_minus"] = opt_num(b.weyl_minus);
  }
  w["conformally_flat_input"] = b.weyl_free;
  bj["weyl"] = w;
  bj["weyl_scalar_flat"] = bound_json(b.weyl_scalar_flat);
  ojson h = bound_json(b.harmonic);
  add_comparison(h, b.harmonic_detail);
  bj["harmonic"] = h;
  ojson hs = bound_json(b.harmonic_scalar_flat);
  add_comparison(hs, b.harmonic_scalar_flat_detail);
  bj["harmonic_scalar_flat"] = hs;
  doc["bounds"] = bj;

  if (b.constants) {
    doc["constants"] = {{"R", b.constants->R},
                        {"a", b.constants->a},
                        {"b", b.constants->b},
                        {"A_plus", opt_num(b.constants->A_plus)},
                        {"A_minus", opt_num(b.constants->A_minus)}};
  } else {
    doc["constants"] = nullptr;
  }

  ojson flags = ojson::array();
  for (const Flag& f : b.flags) {
    flags.push_back({{"name", f.name},
                     {"prerequisites", f.prerequisites},
                     {"condition", f.condition},
                     {"asserted", f.asserted},
                     {"margin", f.margin},
                     {"detail", f.detail}});
  }
  doc["flags"] = flags;

  if (in.known_spectrum) {
    const double lam = *in.known_spectrum;
    ojson ks;
    ks["lambda1_sq"] = lam;
    ojson sharp = ojson::array(), violated = ojson::array();
    for (const auto& [name, bv] : {std::pair<const char*, const BoundValue*>{"friedrich", &b.friedrich},
                                   {"weyl", &b.weyl},
                                   {"weyl_scalar_flat", &b.weyl_scalar_flat},
                                   {"harmonic", &b.harmonic},
                                   {"harmonic_scalar_flat", &b.harmonic_scalar_flat}}) {
      if (!bv->applicable || !bv->value) continue;
      const double v = *bv->value;
      if (std::abs(lam - v) <= kSharpTolerance * std::max(1.0, std::abs(lam))) sharp.push_back(name);
      if (lam < v - kSpectrumSlack * std::max(1.0, std::abs(lam))) violated.push_back(name);
    }
    ks["sharp_for"] = sharp;
    ks["violated_by"] = violated;
    doc["known_spectrum"] = ks;
  } else {
    doc["known_spectrum"] = nullptr;
  }
  return doc;
}

std::string emit_json(const ojson& doc) {
  std::string out;
  emit(out, doc, 0);
  out += "\n";
  return out;
}

std::string format_text(const ojson& doc) {
  std::ostringstream os;
  flatten(os, "", doc);
  return os.str();
}

}  // namespace spinbound
