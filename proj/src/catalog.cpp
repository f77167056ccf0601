#include "catalog.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace spinbound {

namespace {

void require_dim(int n) {
  if (n < 4 || n > 8)
    throw Error(ErrorCode::kInvalidArgument,
                "dimension " + std::to_string(n) + " outside the supported range 4..8");
}

int as_int(const std::string& name, double v) {
  if (v != std::floor(v) || std::abs(v) > 1e6)
    throw Error(ErrorCode::kInvalidArgument, "parameter " + name + " must be an integer");
  return static_cast<int>(v);
}

double take(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw Error(ErrorCode::kInvalidArgument, "missing parameter " + name);
  return it->second;
}

void only(const ParamMap& p, std::initializer_list<std::string> names) {
  for (const auto& [k, v] : p) {
    bool known = false;
    for (const std::string& n : names) known = known || n == k;
    if (!known) throw Error(ErrorCode::kInvalidArgument, "unexpected parameter " + k);
  }
}

Tensor4 space_form(int n, double c) {
  Tensor4 t(n);
  if (c == 0.0) return t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      t(i, j, i, j) = c;
      t(i, j, j, i) = -c;
    }
  return t;
}

}  // namespace

CatalogEntry constant_curvature(int n, double c) {
  require_dim(n);
  CatalogEntry e;
  e.samples.push_back(RiemannTensor::assume_valid(space_form(n, c)));
  ManifoldSpec& s = e.spec;
  s.id = c == 0.0 ? "flat" : "sphere";
  s.params = {{"n", n}, {"c", c}};
  if (c == 0.0) s.params = {{"n", n}};
  s.n = n;
  s.meta.compact = c >= 0.0;
  s.meta.spin = true;
  s.meta.symmetric_space = true;
  s.meta.divergence_free_curvature = true;
  s.meta.divergence_free_weyl = true;
  s.meta.conformally_ricci_flat = c == 0.0;
  s.einstein = true;
  s.irreducible = c != 0.0;
  if (c > 0.0) s.known_spectrum = n * n * c / 4.0;
  return e;
}

CatalogEntry flat(int n) { return constant_curvature(n, 0.0); }

CatalogEntry product_spheres(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "sphere radii must be positive");
  const double c1 = 1.0 / (r1 * r1), c2 = 1.0 / (r2 * r2);
  Tensor4 t(4);
  auto block = [&](int a, int b, double c) {
    t(a, b, a, b) = c;
    t(b, a, b, a) = c;
    t(a, b, b, a) = -c;
    t(b, a, a, b) = -c;
  };
  block(0, 1, c1);
  block(2, 3, c2);
  CatalogEntry e;
  e.samples.push_back(RiemannTensor::assume_valid(std::move(t)));
  ManifoldSpec& s = e.spec;
  s.id = "s2xs2";
  s.params = {{"r1", r1}, {"r2", r2}};
  s.n = 4;
  s.meta.compact = true;
  s.meta.spin = true;
  s.meta.symmetric_space = true;
  s.meta.divergence_free_curvature = true;
  // parallel curvature, so the Weyl tensor is divergence free at any radii
  s.meta.divergence_free_weyl = true;
  s.einstein = std::abs(r1 - r2) <= 1e-12 * std::max(r1, r2);
  s.irreducible = false;
  return e;
}

CatalogEntry fubini_study(int m, double c) {
  if (m < 2 || 2 * m > 8)
    throw Error(ErrorCode::kInvalidArgument,
                "complex dimension " + std::to_string(m) + " outside the supported range 2..4");
  if (!(c > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "holomorphic sectional curvature must be positive");
  const int n = 2 * m;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);  // J(a, b) = <J e_b, e_a>
  for (int a = 0; a < m; ++a) {
    J(2 * a + 1, 2 * a) = 1.0;
    J(2 * a, 2 * a + 1) = -1.0;
  }
  Tensor4 t(n);
  const double q = c / 4.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double g = (i == k && j == l ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0);
          t(i, j, k, l) =
              q * (g + J(k, i) * J(l, j) - J(k, j) * J(l, i) + 2.0 * J(i, j) * J(k, l));
        }
  CatalogEntry e;
  e.samples.push_back(RiemannTensor::assume_valid(std::move(t)));
  ManifoldSpec& s = e.spec;
  s.id = "cp";
  s.params = {{"m", m}, {"c", c}};
  s.n = n;
  s.meta.compact = true;
  s.meta.spin = m % 2 == 1;
  s.meta.symmetric_space = true;
  s.meta.divergence_free_curvature = true;
  s.meta.divergence_free_weyl = true;
  s.einstein = true;
  s.irreducible = true;
  return e;
}

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  std::stringstream ss(text);
  std::string item;
  auto trim = [](std::string t) {
    const auto b = t.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return t.substr(b, t.find_last_not_of(" \t") - b + 1);
  };
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::kInvalidArgument, "malformed parameter '" + item + "'");
    const std::string key = trim(item.substr(0, eq)), val = trim(item.substr(eq + 1));
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size() || !std::isfinite(v))
      throw Error(ErrorCode::kInvalidArgument, "parameter " + key + " is not a number");
    if (!out.emplace(key, v).second)
      throw Error(ErrorCode::kInvalidArgument, "parameter " + key + " given twice");
  }
  return out;
}

CatalogEntry catalog_entry(const std::string& id, const ParamMap& params) {
  if (id == "sphere") {
    only(params, {"n", "c"});
    return constant_curvature(as_int("n", take(params, "n")), take(params, "c"));
  }
  if (id == "flat") {
    only(params, {"n"});
    return flat(as_int("n", take(params, "n")));
  }
  if (id == "s2xs2") {
    only(params, {"r1", "r2"});
    return product_spheres(take(params, "r1"), take(params, "r2"));
  }
  if (id == "cp") {
    only(params, {"m", "c"});
    return fubini_study(as_int("m", take(params, "m")), take(params, "c"));
  }
  throw Error(ErrorCode::kUnknownId, "unknown manifold id '" + id + "'");
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{"sphere", "flat", "s2xs2", "cp"};
  return ids;
}

}  // namespace spinbound
