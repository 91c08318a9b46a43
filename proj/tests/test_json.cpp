#include <gtest/gtest.h>

#include "apg/json_io.hpp"

using namespace apg;

TEST(Json, SpecRoundTrip) {
  for (const FamilySpec& spec :
       {FamilySpec{MobiusSpec{6}}, FamilySpec{BicycleSpec{9, {2, 5}, {3}}}, FamilySpec{WheelSpec{7}},
        FamilySpec{K33ChainSpec{CornerSet::from_mask(6)}}, FamilySpec{HSpec{HFamily::h2, 3, 1, 2, CornerSet::from_mask(3)}}}) {
    const json j = to_json(spec);
    EXPECT_EQ(describe(spec_from_json(j)), describe(spec)) << j.dump();
    EXPECT_EQ(describe(spec_from_json(json::parse(j.dump()))), describe(spec));
  }
}

TEST(Json, MalformedSpecs) {
  EXPECT_THROW(spec_from_json(json::parse(R"({"family":"torus"})")), InvalidSpec);
  EXPECT_THROW(spec_from_json(json::parse(R"({"family":"mobius"})")), InvalidSpec);
  EXPECT_THROW(spec_from_json(json::parse(R"({"family":"mobius","k":"three"})")), InvalidSpec);
  EXPECT_THROW(spec_from_json(json::parse(R"({"family":"h1","p":1,"q":1,"r":1,"deleted":["xy"]})")), InvalidSpec);
  EXPECT_THROW(spec_from_json(json::parse("[1,2]")), InvalidSpec);
}

TEST(Json, SpectrumDocument) {
  const Graph g = gen_mobius(4).graph;
  const json j = to_json(cycle_spectrum(g, true), true);
  EXPECT_EQ(j.at("n"), 8);
  EXPECT_EQ(j.at("lengths"), json::array({4, 5, 6, 7, 8}));
  EXPECT_EQ(j.at("witnesses").size(), 5u);
  EXPECT_FALSE(to_json(cycle_spectrum(g), false).contains("witnesses"));
}

TEST(Json, ClassificationDocument) {
  const json j = to_json(classify(complete_bipartite(3, 3)));
  EXPECT_EQ(j.at("schema"), kJsonSchema);
  EXPECT_EQ(j.at("gate"), "almost-planar");
  EXPECT_EQ(j.at("spec").at("family"), "mobius");
  const json planar = to_json(classify(gen_wheel(5).graph));
  EXPECT_EQ(planar.at("gate"), "planar");
}

TEST(Json, Roles) {
  const json j = roles_to_json(gen_bicycle({6, {}, {}}));
  EXPECT_EQ(j.at("spec").at("family"), "bicycle");
  EXPECT_TRUE(j.contains("vertices"));
  EXPECT_TRUE(j.contains("edges"));
}
