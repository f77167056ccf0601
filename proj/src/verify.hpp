#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral.hpp"

namespace spinbound {

struct VerifyOptions {
  std::string suite = "all";  // identities, grading, bounds-consistency, all
  std::vector<int> dims{4, 5, 6, 7};
  int trials = 200;
  uint64_t seed = 1;
};

struct VerifyOutcome {
  nlohmann::ordered_json doc;
  bool passed = false;
};

const std::vector<std::string>& verify_suites();

// Throws Error(kInvalidArgument) for an unknown suite, an unsupported dimension
// or a nonpositive trial count.
VerifyOutcome run_verify(const VerifyOptions& opt);

// Random summary with consistent magnitudes: |kappa| <= (n-1) sigma,
// kappa >= R0/n, |Ric - R/n|^2 compatible with kappa, mu0 <= sigma.
// Every fourth trial has R0 = 0.
SpectralSummary random_summary(int n, uint64_t seed, int trial);

}  // namespace spinbound
