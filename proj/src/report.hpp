#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "input.hpp"

namespace spinbound {

inline constexpr const char* kConventionVersion = "spinbound-conventions/1";

struct ReportOptions {
  bool chiral = false;
  int restarts = 64;
  uint64_t seed = 1;
};

// Full pipeline: per-sample quantities, summary, bounds and flags.
nlohmann::ordered_json run_report(const CurvatureInput& in, const ReportOptions& opt);

// Numbers with 17 significant digits (printf %.17g), two-space indentation,
// keys in insertion order. Non-finite numbers are written as null.
std::string emit_json(const nlohmann::ordered_json& doc);

// Human-readable rendering of a report or verify document: one line per leaf,
// dotted path then value, numbers with 6 significant digits.
std::string format_text(const nlohmann::ordered_json& doc);

}  // namespace spinbound
