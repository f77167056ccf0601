#include <cmath>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "error.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace spinbound;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json report_for(const std::string& id, const std::string& params, bool chiral = false) {
  ReportOptions opt;
  opt.chiral = chiral;
  return run_report(input_from_catalog(id, parse_params(params)), opt);
}

}  // namespace

// ============================================================================
// report documents
// ============================================================================

TEST(Report, TopLevelLayout) {
  auto doc = report_for("sphere", "n=4,c=1");
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  std::vector<std::string> expect{"convention_version", "input",  "options", "metadata",
                                  "summary",            "samples", "bounds", "constants",
                                  "flags",              "known_spectrum"};
  EXPECT_EQ(keys, expect);
  EXPECT_EQ(doc["convention_version"], kConventionVersion);
}

TEST(Report, SphereIsSharp) {
  auto doc = report_for("sphere", "n=4,c=1");
  EXPECT_NEAR(doc["bounds"]["friedrich"]["value"].get<double>(), 4.0, 1e-12);
  EXPECT_NEAR(doc["bounds"]["weyl"]["value"].get<double>(), 4.0, 1e-12);
  EXPECT_NEAR(doc["known_spectrum"]["lambda1_sq"].get<double>(), 4.0, 1e-15);
  auto sharp = doc["known_spectrum"]["sharp_for"];
  EXPECT_NE(std::find(sharp.begin(), sharp.end(), "weyl"), sharp.end());
  EXPECT_TRUE(doc["known_spectrum"]["violated_by"].empty());
}

TEST(Report, ChiralFieldsOnlyWhenRequested) {
  auto plain = report_for("s2xs2", "r1=1,r2=1");
  auto chiral = report_for("s2xs2", "r1=1,r2=1", true);
  EXPECT_FALSE(plain["bounds"]["weyl"].contains("value_plus"));
  ASSERT_TRUE(chiral["bounds"]["weyl"].contains("value_plus"));
  EXPECT_NEAR(chiral["summary"]["nu0_plus"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(chiral["summary"]["nu0_minus"].get<double>(), 2.0 / 3.0, 1e-12);
}

TEST(Report, FlatHasNullHarmonicBounds) {
  auto doc = report_for("flat", "n=4");
  EXPECT_TRUE(doc["bounds"]["harmonic"]["value"].is_null());
  EXPECT_TRUE(doc["bounds"]["harmonic_scalar_flat"]["value"].is_null());
  EXPECT_EQ(doc["bounds"]["weyl"]["value"].get<double>(), 0.0);
}

TEST(Report, DerivedMetadataIsListed) {
  auto doc = report_for("s2xs2", "r1=1,r2=2");
  EXPECT_TRUE(doc["metadata"]["divergence_free_weyl"].get<bool>());
  EXPECT_TRUE(doc["metadata"].contains("derived"));
}

// ============================================================================
// emitter
// ============================================================================

TEST(Emitter, ParsesBackToSameDocument) {
  for (auto [id, params] : {std::pair{"sphere", "n=5,c=2"}, std::pair{"s2xs2", "r1=1,r2=3"},
                            std::pair{"cp", "m=3,c=4"}, std::pair{"flat", "n=4"}}) {
    auto doc = report_for(id, params);
    std::string text = emit_json(doc);
    EXPECT_EQ(ordered_json::parse(text), doc) << id;
    EXPECT_EQ(emit_json(ordered_json::parse(text)), text) << id;
  }
}

TEST(Emitter, NumberFormatting) {
  ordered_json d;
  d["third"] = 1.0 / 3.0;
  d["two"] = 2.0;
  d["count"] = 3;
  d["nan"] = std::nan("");
  d["list"] = {1.5, true, "x"};
  std::string s = emit_json(d);
  EXPECT_NE(s.find("0.33333333333333331"), std::string::npos);
  EXPECT_NE(s.find("\"two\": 2.0"), std::string::npos);
  EXPECT_NE(s.find("\"count\": 3"), std::string::npos);
  EXPECT_NE(s.find("\"nan\": null"), std::string::npos);
  EXPECT_EQ(s.rfind("{\n  \"third\"", 0), 0u);
}

TEST(Emitter, TextRendering) {
  ordered_json d;
  d["a"]["b"] = 0.123456789;
  d["c"] = json::array({1, 2});
  std::string t = format_text(d);
  EXPECT_NE(t.find("a.b"), std::string::npos);
  EXPECT_NE(t.find("0.123457"), std::string::npos);
  EXPECT_NE(t.find("c[1]"), std::string::npos);
}

// ============================================================================
// verify driver
// ============================================================================

TEST(Verify, SmallRunPasses) {
  VerifyOptions opt;
  opt.dims = {4, 5};
  opt.trials = 5;
  auto out = run_verify(opt);
  EXPECT_TRUE(out.passed);
  EXPECT_TRUE(out.doc["pass"].get<bool>());
  EXPECT_FALSE(out.doc["results"].empty());
  for (const auto& r : out.doc["results"]) EXPECT_TRUE(r["pass"].get<bool>()) << r["tag"];
}

TEST(Verify, Deterministic) {
  VerifyOptions opt;
  opt.suite = "identities";
  opt.dims = {4};
  opt.trials = 3;
  EXPECT_EQ(emit_json(run_verify(opt).doc), emit_json(run_verify(opt).doc));
}

TEST(Verify, RejectsBadOptions) {
  VerifyOptions opt;
  opt.suite = "nonsense";
  EXPECT_THROW(run_verify(opt), Error);
  opt.suite = "all";
  opt.dims = {9};
  EXPECT_THROW(run_verify(opt), Error);
  opt.dims = {4};
  opt.trials = 0;
  EXPECT_THROW(run_verify(opt), Error);
}

TEST(Verify, RandomSummariesAreConsistent) {
  for (int trial = 0; trial < 40; ++trial) {
    auto s = random_summary(6, 2, trial);
    EXPECT_LE(std::abs(s.kappa), 5 * s.sigma + 1e-12);
    EXPECT_LE(std::sqrt(s.mu0_sq), s.sigma + 1e-12);
    if (trial % 4 == 0) {
      EXPECT_EQ(s.R0, 0.0);
    }
  }
}
