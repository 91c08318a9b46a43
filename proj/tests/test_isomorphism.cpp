#include <gtest/gtest.h>

#include "apg/families.hpp"
#include "apg/isomorphism.hpp"
#include "test_support.hpp"

using namespace apg;

TEST(Isomorphism, RelabelledCopiesMatch) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 11;
    const Graph g = support::random_graph(rng, n, 0.45);
    const auto perm = support::random_permutation(rng, n);
    const Graph h = relabel(g, perm);
    const auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map) << to_edge_list(g);
    EXPECT_TRUE(is_isomorphism(g, h, *map));
  }
}

TEST(Isomorphism, RegularGraphsNeedSearch) {
  EXPECT_TRUE(are_isomorphic(gen_mobius(3).graph, complete_bipartite(3, 3)));
  EXPECT_FALSE(are_isomorphic(support::prism(), complete_bipartite(3, 3)));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_FALSE(are_isomorphic(gen_mobius(5).graph, support::petersen()));
  std::mt19937 rng(5);
  const Graph p = support::petersen();
  EXPECT_TRUE(are_isomorphic(p, relabel(p, support::random_permutation(rng, 10))));
}

TEST(Isomorphism, DifferentSizesOrDegrees) {
  EXPECT_FALSE(are_isomorphic(cycle_graph(5), cycle_graph(6)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), Graph(4, {{1, 2}, {1, 3}, {1, 4}})));
}

TEST(Isomorphism, MapCheckerRejectsBadMaps) {
  const Graph g = path_graph(3);
  EXPECT_TRUE(is_isomorphism(g, g, {0, 1, 2, 3}));
  EXPECT_TRUE(is_isomorphism(g, g, {0, 3, 2, 1}));
  EXPECT_FALSE(is_isomorphism(g, g, {0, 2, 1, 3}));
  EXPECT_FALSE(is_isomorphism(g, g, {0, 1, 1, 3}));
}
