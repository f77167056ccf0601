#include <cmath>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "catalog.hpp"
#include "error.hpp"
#include "input.hpp"

using namespace spinbound;
using nlohmann::json;

namespace {

json riemann_entries(const RiemannTensor& K) {
  json arr = json::array();
  int n = K.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (K(i, j, k, l) != 0.0) arr.push_back({i, j, k, l, K(i, j, k, l)});
  return arr;
}

ErrorCode code_of(const std::string& text) {
  try {
    input_from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kInvalidArgument;
}

}  // namespace

// ============================================================================
// catalog
// ============================================================================

TEST(Catalog, SphereMetadata) {
  auto e = constant_curvature(5, 2.0);
  EXPECT_EQ(e.spec.id, "sphere");
  EXPECT_EQ(e.spec.n, 5);
  EXPECT_TRUE(e.spec.meta.compact);
  EXPECT_TRUE(e.spec.meta.symmetric_space);
  EXPECT_TRUE(e.spec.einstein);
  ASSERT_TRUE(e.spec.known_spectrum.has_value());
  EXPECT_DOUBLE_EQ(*e.spec.known_spectrum, 25.0 * 2.0 / 4.0);
  EXPECT_EQ(e.samples[0](0, 1, 0, 1), 2.0);
  EXPECT_EQ(e.samples[0](0, 1, 1, 0), -2.0);
}

TEST(Catalog, HyperbolicIsNotCompact) {
  auto e = constant_curvature(4, -1.0);
  EXPECT_FALSE(e.spec.meta.compact);
  EXPECT_FALSE(e.spec.known_spectrum.has_value());
}

TEST(Catalog, FlatTorus) {
  auto e = flat(6);
  EXPECT_EQ(e.spec.id, "flat");
  EXPECT_TRUE(e.spec.meta.conformally_ricci_flat);
  EXPECT_EQ(e.samples[0].components().max_abs(), 0.0);
}

TEST(Catalog, ProductOfSpheres) {
  auto eq = product_spheres(1.0, 1.0);
  EXPECT_TRUE(eq.spec.einstein);
  auto d = decompose(eq.samples[0]);
  EXPECT_NEAR(d.scalar, 4.0, 1e-15);
  auto uneq = product_spheres(1.0, 2.0);
  EXPECT_FALSE(uneq.spec.einstein);
  EXPECT_TRUE(uneq.spec.meta.divergence_free_curvature);
  EXPECT_TRUE(uneq.spec.meta.divergence_free_weyl);
  EXPECT_NEAR(decompose(uneq.samples[0]).scalar, 2.0 + 0.5, 1e-15);
  EXPECT_THROW(product_spheres(0.0, 1.0), Error);
}

TEST(Catalog, FubiniStudy) {
  auto e = fubini_study(3, 4.0);
  EXPECT_EQ(e.spec.n, 6);
  EXPECT_TRUE(e.spec.meta.spin);
  EXPECT_FALSE(fubini_study(2, 4.0).spec.meta.spin);
  const auto& K = e.samples[0];
  EXPECT_NEAR(K(0, 1, 0, 1), 4.0, 1e-15);  // holomorphic plane (e1, Je1)
  EXPECT_NEAR(K(0, 2, 0, 2), 1.0, 1e-15);  // totally real plane
  auto d = decompose(K);
  EXPECT_LT((d.ricci - 8.0 * Eigen::MatrixXd::Identity(6, 6)).norm(), 1e-13);
  EXPECT_THROW(fubini_study(5, 1.0), Error);
  EXPECT_THROW(fubini_study(3, -1.0), Error);
}

TEST(Catalog, Dispatch) {
  auto e = catalog_entry("sphere", parse_params("n=6,c=0.5"));
  EXPECT_EQ(e.spec.n, 6);
  EXPECT_EQ(catalog_entry("cp", parse_params("m=2,c=1")).spec.n, 4);
  try {
    catalog_entry("torus", {});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kUnknownId);
  }
  EXPECT_THROW(catalog_entry("sphere", parse_params("n=4")), Error);
  EXPECT_THROW(catalog_entry("sphere", parse_params("n=4,c=1,r=2")), Error);
  EXPECT_THROW(catalog_entry("sphere", parse_params("n=9,c=1")), Error);
  EXPECT_THROW(catalog_entry("sphere", parse_params("n=4.5,c=1")), Error);
  EXPECT_FALSE(catalog_ids().empty());
}

TEST(Catalog, ParamParsing) {
  auto p = parse_params("r1=1, r2=2.5");
  EXPECT_EQ(p.at("r1"), 1.0);
  EXPECT_EQ(p.at("r2"), 2.5);
  EXPECT_TRUE(parse_params("").empty());
  EXPECT_THROW(parse_params("r1"), Error);
  EXPECT_THROW(parse_params("r1=x"), Error);
  EXPECT_THROW(parse_params("r1=1,r1=2"), Error);
}

// ============================================================================
// input files
// ============================================================================

TEST(Input, RoundTripOfCatalogTensor) {
  auto e = fubini_study(2, 2.0);
  json doc = {{"n", 4},
              {"points", json::array({{{"riemann", riemann_entries(e.samples[0])}}})},
              {"flags", {{"compact", true}, {"spin", false}}}};
  auto in = input_from_json(doc.dump());
  EXPECT_EQ(in.n, 4);
  ASSERT_EQ(in.samples.size(), 1u);
  EXPECT_EQ(in.samples[0], e.samples[0]);
  EXPECT_TRUE(in.meta.compact);
  EXPECT_FALSE(in.meta.spin);
  EXPECT_FALSE(in.meta.divergence_free_weyl);
  EXPECT_EQ(in.echo["source"], "json");
  EXPECT_EQ(in.echo["digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
}

TEST(Input, Rejections) {
  EXPECT_EQ(code_of("{"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 4, "points": [], "extra": 1})"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 4, "points": []})"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 4, "points": [{"riemann": [[0,1,0,4,1.0]]}]})"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 4, "points": [{"riemann": [[0,1,0,1,1.0],[0,1,0,1,1.0]]}]})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 4, "points": [{"riemann": []}], "flags": {"kahler": true}})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 3, "points": [{"riemann": []}]})"), ErrorCode::kValidation);
  // only one of the symmetric components listed
  EXPECT_EQ(code_of(R"({"n": 4, "points": [{"riemann": [[0,1,0,1,1.0]]}]})"), ErrorCode::kValidation);
}

TEST(Input, ZeroTensorIsValid) {
  auto in = input_from_json(R"({"n": 5, "points": [{"riemann": []}, {"riemann": []}]})");
  EXPECT_EQ(in.samples.size(), 2u);
  EXPECT_FALSE(in.meta.compact);
}

TEST(Input, MissingFile) {
  EXPECT_THROW(input_from_file("/nonexistent/curvature.json"), Error);
}

TEST(Input, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(Input, CatalogEcho) {
  auto in = input_from_catalog("s2xs2", parse_params("r1=1,r2=1"));
  EXPECT_EQ(in.echo["source"], "catalog");
  EXPECT_EQ(in.echo["id"], "s2xs2");
  EXPECT_TRUE(in.echo["einstein"].get<bool>());
  EXPECT_EQ(in.n, 4);
}
