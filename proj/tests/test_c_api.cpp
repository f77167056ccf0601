#include <cstring>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "spinbound/spinbound.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sb_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Versions) {
  EXPECT_STREQ(sb_version(), "0.1.0");
  EXPECT_STREQ(sb_convention_version(), "spinbound-conventions/1");
}

TEST(CApi, CatalogReport) {
  sb_curvature* c = nullptr;
  ASSERT_EQ(sb_curvature_from_catalog("sphere", "n=6,c=1", &c), SB_OK);
  EXPECT_EQ(sb_curvature_dim(c), 6);
  EXPECT_EQ(sb_curvature_sample_count(c), 1u);
  sb_report_options opt;
  sb_report_options_init(&opt);
  EXPECT_EQ(opt.restarts, 64);
  char* out = nullptr;
  ASSERT_EQ(sb_report_run(c, &opt, &out), SB_OK);
  auto doc = nlohmann::json::parse(take(out));
  EXPECT_NEAR(doc["bounds"]["weyl"]["value"].get<double>(), 9.0, 1e-12);
  sb_curvature_free(c);
}

TEST(CApi, ErrorCodes) {
  sb_curvature* c = nullptr;
  EXPECT_EQ(sb_curvature_from_catalog("torus", "", &c), SB_ERR_UNKNOWN_ID);
  EXPECT_EQ(c, nullptr);
  EXPECT_NE(std::strlen(sb_last_error()), 0u);
  EXPECT_EQ(sb_curvature_from_catalog("sphere", "n=4", &c), SB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sb_curvature_from_json("{", &c), SB_ERR_PARSE);
  EXPECT_EQ(sb_curvature_from_json(R"({"n": 4, "points": [{"riemann": [[0,1,0,1,1.0]]}]})", &c),
            SB_ERR_VALIDATION);
  EXPECT_EQ(sb_curvature_from_catalog(nullptr, "", &c), SB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sb_curvature_from_catalog("sphere", "n=4,c=1", nullptr), SB_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  EXPECT_EQ(sb_report_run(nullptr, nullptr, &out), SB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sb_format_text("[1,", &out), SB_ERR_PARSE);
}

TEST(CApi, LastErrorClearsOnSuccess) {
  sb_curvature* c = nullptr;
  sb_curvature_from_catalog("torus", "", &c);
  ASSERT_EQ(sb_curvature_from_catalog("flat", "n=4", &c), SB_OK);
  EXPECT_STREQ(sb_last_error(), "");
  sb_curvature_free(c);
  sb_curvature_free(nullptr);
}

TEST(CApi, VerifyAndFormat) {
  sb_verify_options opt;
  sb_verify_options_init(&opt);
  int dims[] = {4};
  opt.suite = "grading";
  opt.dims = dims;
  opt.dim_count = 1;
  opt.trials = 4;
  char* out = nullptr;
  int passed = 0;
  ASSERT_EQ(sb_verify_run(&opt, &out, &passed), SB_OK);
  EXPECT_EQ(passed, 1);
  std::string json = take(out);
  char* text = nullptr;
  ASSERT_EQ(sb_format_text(json.c_str(), &text), SB_OK);
  EXPECT_NE(take(text).find("suite"), std::string::npos);
  opt.suite = "nonsense";
  EXPECT_EQ(sb_verify_run(&opt, &out, &passed), SB_ERR_INVALID_ARGUMENT);
}
