#include <gtest/gtest.h>

#include "unicomp/error.h"
#include "unicomp/generators.h"
#include "unicomp/haar.h"
#include "unicomp/json_io.h"

namespace unicomp {
namespace {

TEST(Json, SeventeenDigitFloats) {
  Json j;
  j["exact"] = "1/6";
  j["approx"] = 1.0 / 6.0;
  j["zero"] = 0.0;
  j["n"] = 3;
  EXPECT_EQ(dump_json(j), R"({"exact":"1/6","approx":0.16666666666666666,"zero":0.0,"n":3})");
}

TEST(Json, ParamMatrixRoundtrip) {
  HaarStream s(1, 0);
  for (Group g : {Group::kUnitary, Group::kSpecialUnitary}) {
    const ParamMatrix p = sample(3, g, s);
    const std::string text = dump_json(to_json(p));
    const ParamMatrix q = param_matrix_from_json(Json::parse(text));
    EXPECT_EQ(p, q);
  }
  const Json su = to_json(ParamMatrix(2, Group::kSpecialUnitary));
  EXPECT_EQ(dump_json(su), R"({"group":"SU","d":2,"lambda":[[0.0,0.0],[0.0,0.0]]})");
}

TEST(Json, SpecialUnitaryIgnoresLastSlot) {
  const Json j = Json::parse(R"({"group":"SU","d":2,"lambda":[[0.5,0.1],[0.2,9.0]]})");
  const ParamMatrix p = param_matrix_from_json(j);
  EXPECT_EQ(p(2, 2), 0.0);
  EXPECT_EQ(p(1, 1), 0.5);
}

TEST(Json, ComplexMatrixRoundtrip) {
  HaarStream s(2, 0);
  const ComplexMatrix u = build_unitary(sample(4, Group::kUnitary, s));
  EXPECT_EQ(complex_matrix_from_json(Json::parse(dump_json(to_json(u)))), u);
  EXPECT_EQ(complex_matrix_from_json(Json::parse(dump_json(to_json_entries(u)))), u);
}

TEST(Json, ParseErrors) {
  EXPECT_THROW(complex_matrix_from_json(Json::parse(R"({"re":[[1,0],[0]]})")), Error);
  EXPECT_THROW(complex_matrix_from_json(Json::parse(R"({"d":3,"re":[[1,0],[0,1]]})")), Error);
  EXPECT_THROW(param_matrix_from_json(Json::parse(R"({"group":"X","lambda":[[0]]})")), Error);
  EXPECT_THROW(weighted_set_from_json(Json::parse(R"([{"re":[[1]],"im":[[0]]}])")), Error);
}

TEST(Json, WeightedSet) {
  const auto set = weighted_set_from_json(
      Json::parse(R"([{"re":[[1,0],[0,1]],"im":[[0,0],[0,0]],"w":0.5},
                      {"re":[[0,1],[1,0]],"im":[[0,0],[0,0]],"w":0.5}])"));
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[1].u(1, 2), Complex(1.0));
  EXPECT_EQ(set[1].weight, 0.5);
}

}  // namespace
}  // namespace unicomp
