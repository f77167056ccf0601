#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "tensor_core.hpp"

namespace spinbound {

struct ManifoldSpec {
  std::string id;
  std::vector<std::pair<std::string, double>> params;  // canonical order
  int n = 0;
  Metadata meta;
  bool einstein = false;
  bool irreducible = false;
  std::optional<double> known_spectrum;  // first Dirac eigenvalue squared
};

struct CatalogEntry {
  std::vector<RiemannTensor> samples;
  ManifoldSpec spec;
};

// Round sphere (c > 0), flat torus (c = 0) or hyperbolic space (c < 0).
CatalogEntry constant_curvature(int n, double c);

// Flat torus T^n with the trivial spin structure.
CatalogEntry flat(int n);

// S^2(r1) x S^2(r2); frame (e1, e2) on the first factor, (e3, e4) on the second.
CatalogEntry product_spheres(double r1, double r2);

// CP^m with holomorphic sectional curvature c in the frame (e1, Je1, e2, Je2, ...).
CatalogEntry fubini_study(int m, double c);

using ParamMap = std::map<std::string, double>;

// "r1=1,r2=2" -> {r1: 1, r2: 2}. Throws Error(kInvalidArgument) on malformed text.
ParamMap parse_params(const std::string& text);

// Dispatch on the ids sphere{n,c}, flat{n}, s2xs2{r1,r2}, cp{m,c}. Unknown ids
// throw Error(kUnknownId); missing, extra or out-of-range parameters throw
// Error(kInvalidArgument).
CatalogEntry catalog_entry(const std::string& id, const ParamMap& params);

const std::vector<std::string>& catalog_ids();

}  // namespace spinbound
