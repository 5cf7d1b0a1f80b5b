#include <gtest/gtest.h>

#include "clmath/errors.hpp"
#include "clmath/rosetta.hpp"
#include "clmath/sampling.hpp"
#include "clmath/spec_json.hpp"

namespace clmath {
namespace {

TEST(SpecJson, ParsesEveryForm) {
  const auto b = spec_from_json(Json::parse(R"({"form":"bancor_v2","x0":100,"y0":100,"A":2})"));
  EXPECT_EQ(std::get<BancorV2Params>(b).A, 2.0);
  const auto n = spec_from_json(
      Json::parse(R"({"form":"natural","anchor":"intercepts","x_int":300,"y_int":300,"c":4})"));
  EXPECT_EQ(std::get<NaturalParams>(n).anchor, Anchor::intercepts);
  EXPECT_EQ(std::get<NaturalParams>(n).anchor_y, 300.0);
  EXPECT_NO_THROW(spec_from_json(Json::parse(R"({"form":"reference","x0":1,"y0":2})")));
}

TEST(SpecJson, Errors) {
  const auto field_of = [](const char* text) {
    try {
      spec_from_json(Json::parse(text));
    } catch (const DomainError& e) {
      return e.field();
    }
    return std::string("none");
  };
  EXPECT_EQ(field_of(R"({"form":"bancor_v2","x0":1,"y0":1})"), "A");
  EXPECT_EQ(field_of(R"({"form":"carbon","a":"1","b":1,"z":1})"), "a");
  EXPECT_EQ(field_of(R"({"form":"balancer"})"), "form");
  EXPECT_EQ(field_of(R"({"x0":1})"), "form");
  EXPECT_EQ(field_of(R"({"form":"natural","anchor":"center","x_int":1,"y_int":1,"c":4})"), "x0");
  EXPECT_EQ(field_of(R"([1,2])"), "spec");
}

TEST(SpecJson, RoundTripIsExact) {
  sampling::Rng rng(59);
  for (int i = 0; i < 500; ++i) {
    const auto spec = sampling::random_bounded_spec(rng);
    const auto text = spec_to_json(spec.spec()).dump();
    EXPECT_EQ(params_rel_deviation(spec_from_json(Json::parse(text)), spec.spec()), 0.0);
  }
}

TEST(SpecJson, NonFiniteGeometryIsNull) {
  const auto j = geometry_to_json(validate(ReferenceParams{1, 1}).geometry());
  EXPECT_TRUE(j["x_int"].is_null());
  EXPECT_TRUE(j["c"].is_null());
  EXPECT_EQ(j["p0"], 1.0);
}

}  // namespace
}  // namespace clmath
