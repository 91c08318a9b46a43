#include <gtest/gtest.h>

#include "apg/connectivity.hpp"
#include "apg/families.hpp"
#include "apg/isomorphism.hpp"
#include "apg/planarity.hpp"

using namespace apg;

TEST(Mobius, ShapeAndRoles) {
  for (int k = 3; k <= 8; ++k) {
    const auto inst = gen_mobius(k);
    EXPECT_EQ(inst.graph.order(), 2 * k);
    EXPECT_EQ(inst.graph.size(), static_cast<std::size_t>(3 * k));
    EXPECT_EQ(inst.graph.degree_sequence(), std::vector<int>(static_cast<std::size_t>(2 * k), 3));
    EXPECT_EQ(is_bipartite(inst.graph), k % 2 == 1);
  }
  const auto v8 = gen_mobius(4);
  EXPECT_EQ(role_name(v8.role_of({1, 8})), "twist1");
  EXPECT_EQ(role_name(v8.role_of({4, 5})), "twist2");
  EXPECT_EQ(role_name(v8.role_of({2, 6})), "rung2");
  EXPECT_THROW(gen_mobius(2), InvalidSpec);
}

TEST(Bicycle, FullWheel) {
  for (int n = 5; n <= 10; ++n) {
    const auto inst = gen_bicycle({n, {}, {}});
    EXPECT_EQ(inst.graph.size(), static_cast<std::size_t>(3 * n - 5));
    EXPECT_EQ(inst.vertex(VertexKind::hub_s), n);
    EXPECT_EQ(inst.vertex(VertexKind::hub_t), n - 1);
    EXPECT_EQ(role_name(inst.role_of({n - 1, n})), "z");
    EXPECT_EQ(role_name(inst.role_of({1, n - 2})), "r" + std::to_string(n - 2));
  }
  EXPECT_TRUE(are_isomorphic(gen_bicycle({5, {}, {}}).graph, complete_graph(5)));
  EXPECT_THROW(gen_bicycle({4, {}, {}}), InvalidSpec);
  EXPECT_THROW(gen_bicycle({6, {5}, {}}), InvalidSpec);
}

TEST(Bicycle, SpokeRemovalPrecondition) {
  EXPECT_THROW(gen_bicycle({7, {2}, {2}}), InvalidSpec);
  const auto inst = gen_bicycle({7, {2}, {2}}, false);
  ASSERT_EQ(inst.warnings.size(), 1u);
  EXPECT_NE(inst.warnings[0].find("3-connectivity"), std::string::npos);
  EXPECT_EQ(inst.graph.degree(2), 2);
}

TEST(Bicycle, AGraphs) {
  for (int n = 6; n <= 12; ++n) {
    const auto inst = gen_a_graph(n);
    EXPECT_EQ(inst.graph.size(), static_cast<std::size_t>(2 * (n - 2) + 1));
    EXPECT_EQ(is_bipartite(inst.graph), n % 2 == 0);
    EXPECT_TRUE(is_k_connected(inst.graph, 3));
    EXPECT_FALSE(is_planar(inst.graph));
  }
  EXPECT_TRUE(are_isomorphic(gen_a_graph(6).graph, complete_bipartite(3, 3)));
}

TEST(Wheel, Shape) {
  const auto w = gen_wheel(7);
  EXPECT_EQ(w.graph.size(), 12u);
  EXPECT_EQ(w.graph.degree(7), 6);
  EXPECT_TRUE(is_planar(w.graph));
}

TEST(K33Chain, CornerEdges) {
  EXPECT_TRUE(are_isomorphic(gen_k33_chain({}).graph, complete_bipartite(3, 3)));
  EXPECT_EQ(gen_k33_chain(CornerSet::all()).graph.size(), 12u);
  EXPECT_EQ(gen_k33_chain({true, false, false}).graph.size(), 10u);
}

TEST(HGraphs, IdentityFansGiveK33TripleStar) {
  for (HFamily f : {HFamily::h1, HFamily::h2}) {
    const auto inst = gen_h({f, 1, 1, 1, {}});
    EXPECT_EQ(inst.graph.order(), 6);
    EXPECT_EQ(inst.graph.size(), 12u);
    EXPECT_EQ(inst.graph, gen_k33_chain(CornerSet::all()).graph);
  }
}

TEST(HGraphs, FansAddTwoEdgesPerVertex) {
  for (HFamily f : {HFamily::h1, HFamily::h2})
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q)
        for (int r = 1; r <= 3; ++r)
          for (int mask = 0; mask < 8; ++mask) {
            const HSpec spec{f, p, q, r, CornerSet::from_mask(mask)};
            const auto inst = gen_h(spec);
            const int added = p + q + r - 3;
            EXPECT_EQ(inst.graph.order(), 6 + added);
            EXPECT_EQ(inst.graph.size(), static_cast<std::size_t>(12 + 2 * added - CornerSet::from_mask(mask).count()));
            EXPECT_TRUE(is_k_connected(inst.graph, 3)) << describe(spec);
            EXPECT_FALSE(is_planar(inst.graph)) << describe(spec);
          }
}

TEST(HGraphs, FamiliesDifferInThirdFan) {
  const auto h1 = gen_h1(2, 2, 3, CornerSet::all());
  const auto h2 = gen_h2(2, 2, 3, CornerSet::all());
  const int a1 = h1.vertex(VertexKind::a), b1 = h1.vertex(VertexKind::b);
  const int a2 = h2.vertex(VertexKind::a), b2 = h2.vertex(VertexKind::b);
  EXPECT_TRUE(h1.graph.has_edge(b1, h1.vertex(VertexKind::z, 3)));
  EXPECT_TRUE(h1.graph.has_edge(a1, h1.vertex(VertexKind::z, 3)));
  EXPECT_FALSE(h1.graph.has_edge(a1, h1.vertex(VertexKind::z, 1)));
  EXPECT_TRUE(h2.graph.has_edge(a2, h2.vertex(VertexKind::z, 2)));
  EXPECT_FALSE(h2.graph.has_edge(b2, h2.vertex(VertexKind::z, 1)));
  EXPECT_FALSE(are_isomorphic(h1.graph, h2.graph));
}

TEST(AttachFan, ValidatesTriangle) {
  const auto k4 = LabeledInstance{WheelSpec{4}, complete_graph(4), std::vector<VertexRole>(5), {}, {}};
  EXPECT_THROW(attach_fan(k4, {Edge{1, 2}, Edge{2, 3}, Edge{1, 2}}, {Edge{1, 2}, Edge{2, 3}}, 2), InvalidSpec);
  const auto c4 = LabeledInstance{WheelSpec{4}, cycle_graph(4), std::vector<VertexRole>(5), {}, {}};
  EXPECT_THROW(attach_fan(c4, {Edge{1, 2}, Edge{2, 3}, Edge{1, 3}}, {Edge{1, 2}, Edge{2, 3}}, 2), InvalidSpec);
}

TEST(Enumerate, SmallCounts) {
  // B5 = K5 is the only 3-connected non-planar spoke pattern on five vertices.
  EXPECT_EQ(enumerate_b_minors(5, true, true).size(), 1u);
  for (int n = 6; n <= 9; ++n) {
    const auto specs = enumerate_b_minors(n, true, true);
    EXPECT_FALSE(specs.empty());
    EXPECT_TRUE(std::is_sorted(specs.begin(), specs.end()));
    for (std::size_t i = 0; i < specs.size(); ++i)
      for (std::size_t j = i + 1; j < specs.size(); ++j)
        EXPECT_FALSE(are_isomorphic(gen_bicycle(specs[i]).graph, gen_bicycle(specs[j]).graph));
  }
  EXPECT_THROW(enumerate_b_minors(13, true, true), InvalidSpec);
}

TEST(Enumerate, ContainsFullAndAlternating) {
  const auto specs = enumerate_b_minors(8, true, true);
  auto present = [&](const Graph& g) {
    return std::any_of(specs.begin(), specs.end(), [&](const auto& s) { return are_isomorphic(gen_bicycle(s).graph, g); });
  };
  EXPECT_TRUE(present(gen_bicycle({8, {}, {}}).graph));
  EXPECT_TRUE(present(gen_a_graph(8).graph));
}

TEST(Dot, CarriesRoles) {
  const auto dot = to_dot(gen_bicycle({6, {}, {}}));
  EXPECT_NE(dot.find("6:hub-s"), std::string::npos);
  EXPECT_NE(dot.find("label=\"z\""), std::string::npos);
}

TEST(Describe, Texts) {
  EXPECT_EQ(describe(BicycleSpec{8, {2, 4}, {3}}), "bicycle(n=8, remove-s={2,4}, remove-t={3})");
  EXPECT_EQ(describe(HSpec{HFamily::h1, 2, 1, 3, {true, false, false}}), "h1(p=2, q=1, r=3, delete={ab})");
  EXPECT_EQ(spec_order(HSpec{HFamily::h2, 2, 2, 2, {}}), 9);
}
