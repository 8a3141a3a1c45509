#include <gtest/gtest.h>

#include <filesystem>

#include "test_support.hpp"
#include "toric/error.hpp"
#include "toric/examples.hpp"
#include "toric/fan_io.hpp"

using namespace toric;
using toric::testing::random_nonzero;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

std::string fixture_path(const std::string& name) { return std::string(TORIC_FIXTURE_DIR) + "/" + name + ".json"; }

}  // namespace

TEST(FanDocument, LoadsTheTauDocument) {
  auto doc = parse_fan_document(R"({"name": "tau", "lattice_rank": 3, "rays": [[1,0,0],[1,2,0]], "cones": [[0,1]]})");
  EXPECT_EQ(doc.rays.size(), 2u);
  EXPECT_EQ(fan_from_document(doc), affine_fan(examples::tau()));
}

TEST(FanDocument, LoadsTheTwoChartDocument) {
  auto doc = parse_fan_document(R"({"lattice_rank": 3, "rays": [[1,0,0],[1,2,0],[-1,0,1],[-1,0,-1]],
                                    "cones": [[0,1,2],[0,1,3]]})");
  EXPECT_EQ(fan_from_document(doc), examples::huge());
}

TEST(FanDocument, BundledFixturesMatchBuiltIns) {
  for (const auto& name : examples::fixture_names()) {
    ASSERT_TRUE(std::filesystem::exists(fixture_path(name))) << name;
    EXPECT_EQ(load_fan(fixture_path(name)), examples::fixture(name)) << name;
  }
}

TEST(FanDocument, ParseErrorsNameTheProblem) {
  try {
    parse_fan_document(R"({"lattice_rank": 2, "rays": [[1,0],[0,1]], "cones": [[0,1],[1,7]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("cone 1"), std::string::npos) << e.what();
  }
  for (const char* bad : {"", "[]", "{\"rays\": [], \"cones\": []}",
                          R"({"lattice_rank": 2, "rays": [[1,0,0]], "cones": []})",
                          R"({"lattice_rank": 2, "rays": [[0,0]], "cones": []})",
                          R"({"lattice_rank": 2, "rays": [[1,"x"]], "cones": []})",
                          R"({"lattice_rank": 2, "rays": [[1,0]], "cones": [[]]})",
                          R"({"lattice_rank": 2, "rays": [[1,0]], "cones": [[-1]]})"})
    EXPECT_EQ(kind_of([&] { parse_fan_document(bad); }), ErrorKind::ParseError) << bad;
}

TEST(FanDocument, ValidationErrorsNameTheAxiom) {
  auto doc = parse_fan_document(R"({"lattice_rank": 2, "rays": [[1,0],[0,1],[1,2],[2,1]], "cones": [[0,1],[2,3]]})");
  try {
    fan_from_document(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
    EXPECT_NE(std::string(e.what()).find("intersection"), std::string::npos) << e.what();
  }
  auto line = parse_fan_document(R"({"lattice_rank": 2, "rays": [[1,0],[-1,0]], "cones": [[0,1]]})");
  EXPECT_EQ(kind_of([&] { fan_from_document(line); }), ErrorKind::ValidationError);
}

TEST(FanDocument, LargeEntriesSurviveAsStrings) {
  auto doc = parse_fan_document(R"({"lattice_rank": 2, "rays": [[1,"123456789012345678901234567890"]], "cones": [[0]]})");
  EXPECT_EQ(doc.rays[0][1], Integer("123456789012345678901234567890"));
  EXPECT_EQ(parse_fan_document(serialize(doc)).rays, doc.rays);
}

TEST(FanDocument, RoundTripIsCanonical) {
  std::vector<Fan> fans;
  for (const auto& name : examples::fixture_names()) fans.push_back(examples::fixture(name));
  fans.push_back(resolve(examples::huge()).fan);
  fans.push_back(star_subdivision(examples::projective_plane(), LatticeVector{1, 1}));
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 2;
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < n + 1; ++i) gens.push_back(random_nonzero(n, 3));
    Cone c = Cone::from_generators(n, gens);
    if (!c.is_strongly_convex()) continue;
    fans.push_back(affine_fan(c));
  }
  EXPECT_GE(fans.size(), 20u);
  for (const auto& f : fans) {
    const std::string text = serialize(to_document(f, "x"));
    const Fan back = fan_from_document(parse_fan_document(text));
    EXPECT_EQ(back, f);
    EXPECT_EQ(serialize(to_document(back, "x")), text);
  }
}
