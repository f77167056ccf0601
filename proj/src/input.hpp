#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "catalog.hpp"
#include "tensor_core.hpp"

namespace spinbound {

// Curvature samples plus global facts, from the catalog or from a file.
struct CurvatureInput {
  int n = 0;
  std::vector<RiemannTensor> samples;
  Metadata meta;
  std::optional<double> known_spectrum;
  nlohmann::ordered_json echo;  // id and params, or path and digest
};

CurvatureInput input_from_catalog(const std::string& id, const ParamMap& params);

// Document shape:
//   {"n": 4, "points": [{"riemann": [[i, j, k, l, value], ...]}, ...],
//    "flags": {"compact": true, "spin": true, ...}}
// Indices are 0-based, unlisted components are zero, and nothing is filled in
// by symmetry: every nonzero component must be listed. Repeated index tuples
// and unknown keys are rejected with Error(kParse); symmetry violations with
// Error(kValidation).
CurvatureInput input_from_json(const std::string& text);
CurvatureInput input_from_file(const std::string& path);

// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a64(const std::string& bytes);

}  // namespace spinbound
