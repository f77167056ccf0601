#include "input.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace spinbound {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

int index_value(const json& v, int n, const std::string& where) {
  if (!v.is_number_integer()) parse_error(where + ": index must be an integer");
  const auto i = v.get<long long>();
  if (i < 0 || i >= n) parse_error(where + ": index " + std::to_string(i) + " out of range");
  return static_cast<int>(i);
}

bool flag_value(const json& flags, const char* key) {
  auto it = flags.find(key);
  if (it == flags.end()) return false;
  if (!it->is_boolean()) parse_error(std::string("flags.") + key + " must be a boolean");
  return it->get<bool>();
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CurvatureInput input_from_catalog(const std::string& id, const ParamMap& params) {
  CatalogEntry e = catalog_entry(id, params);
  CurvatureInput in;
  in.n = e.spec.n;
  in.samples = std::move(e.samples);
  in.meta = e.spec.meta;
  in.known_spectrum = e.spec.known_spectrum;
  in.echo["source"] = "catalog";
  in.echo["id"] = e.spec.id;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : e.spec.params) p[k] = v;
  in.echo["params"] = p;
  in.echo["einstein"] = e.spec.einstein;
  in.echo["irreducible"] = e.spec.irreducible;
  return in;
}

CurvatureInput input_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("document must be an object");
  for (const auto& [key, v] : doc.items())
    if (key != "n" && key != "points" && key != "flags") parse_error("unknown key '" + key + "'");

  auto n_it = doc.find("n");
  if (n_it == doc.end() || !n_it->is_number_integer()) parse_error("'n' must be an integer");
  const int n = n_it->get<int>();
  if (n < 4 || n > 8)
    throw Error(ErrorCode::kValidation,
                "dimension " + std::to_string(n) + " outside the supported range 4..8");

  auto pts = doc.find("points");
  if (pts == doc.end() || !pts->is_array() || pts->empty())
    parse_error("'points' must be a nonempty array");

  CurvatureInput in;
  in.n = n;
  for (size_t p = 0; p < pts->size(); ++p) {
    const json& point = (*pts)[p];
    const std::string where = "points[" + std::to_string(p) + "]";
    if (!point.is_object()) parse_error(where + " must be an object");
    for (const auto& [key, v] : point.items())
      if (key != "riemann") parse_error(where + ": unknown key '" + key + "'");
    auto r = point.find("riemann");
    if (r == point.end() || !r->is_array()) parse_error(where + ".riemann must be an array");
    Tensor4 comp(n);
    std::set<std::array<int, 4>> seen;
    for (size_t e = 0; e < r->size(); ++e) {
      const json& entry = (*r)[e];
      const std::string ew = where + ".riemann[" + std::to_string(e) + "]";
      if (!entry.is_array() || entry.size() != 5) parse_error(ew + " must be [i, j, k, l, value]");
      std::array<int, 4> idx{};
      for (int a = 0; a < 4; ++a) idx[static_cast<size_t>(a)] = index_value(entry[static_cast<size_t>(a)], n, ew);
      if (!entry[4].is_number()) parse_error(ew + ": value must be a number");
      const double v = entry[4].get<double>();
      if (!std::isfinite(v)) parse_error(ew + ": value must be finite");
      if (!seen.insert(idx).second) parse_error(ew + ": repeated component");
      comp(idx[0], idx[1], idx[2], idx[3]) = v;
    }
    try {
      in.samples.push_back(validate_riemann(std::move(comp)));
    } catch (const Error& err) {
      throw Error(err.code(), where + ": " + err.what());
    }
  }

  if (auto f = doc.find("flags"); f != doc.end()) {
    if (!f->is_object()) parse_error("'flags' must be an object");
    static const std::set<std::string> known{"compact", "spin", "divergence_free_weyl",
                                             "divergence_free_curvature", "symmetric_space",
                                             "conformally_ricci_flat"};
    for (const auto& [key, v] : f->items())
      if (!known.count(key)) parse_error("unknown flag '" + key + "'");
    in.meta.compact = flag_value(*f, "compact");
    in.meta.spin = flag_value(*f, "spin");
    in.meta.divergence_free_weyl = flag_value(*f, "divergence_free_weyl");
    in.meta.divergence_free_curvature = flag_value(*f, "divergence_free_curvature");
    in.meta.symmetric_space = flag_value(*f, "symmetric_space");
    in.meta.conformally_ricci_flat = flag_value(*f, "conformally_ricci_flat");
  }
  in.echo["source"] = "json";
  in.echo["digest"] = "fnv1a64:" + fnv1a64(text);
  return in;
}

CurvatureInput input_from_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  CurvatureInput in = input_from_json(ss.str());
  in.echo["source"] = "file";
  in.echo["path"] = path;
  return in;
}

}  // namespace spinbound
