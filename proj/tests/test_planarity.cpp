#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/planar_face_traversal.hpp>
#include <map>

#include "apg/connectivity.hpp"
#include "apg/families.hpp"
#include "apg/planarity.hpp"
#include "test_support.hpp"

using namespace apg;

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

BGraph to_boost(const Graph& g) {
  BGraph b(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const auto& e : g.edges()) {
    auto [edge, ok] = boost::add_edge(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1), b);
    boost::put(boost::edge_index, b, edge, index++);
  }
  return b;
}

struct FaceCounter : boost::planar_face_traversal_visitor {
  int faces = 0;
  void begin_face() { ++faces; }
};

// A rotation system is a genuine plane embedding iff face tracing satisfies
// Euler's formula V - E + F = 2 (connected graphs).
bool embedding_satisfies_euler(const Graph& g) {
  BGraph b = to_boost(g);
  using Embedding = std::vector<std::vector<BEdge>>;
  Embedding embedding(boost::num_vertices(b));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                           boost::boyer_myrvold_params::embedding = &embedding[0]))
    return false;
  FaceCounter counter;
  boost::planar_face_traversal(b, &embedding[0], counter);
  return g.order() - static_cast<int>(g.size()) + counter.faces == 2;
}

// Prunes pendant vertices, smooths degree-2 vertices, and checks that K5 or
// K3,3 remains.
bool is_kuratowski_subdivision(const std::vector<Edge>& cert) {
  std::map<int, std::set<int>> adj;
  for (const auto& e : cert) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() <= 1) {
        for (int w : it->second) adj[w].erase(it->first);
        adj.erase(it);
        changed = true;
        break;
      }
      if (it->second.size() != 2) continue;
      const int a = *it->second.begin();
      const int c = *it->second.rbegin();
      if (adj[a].count(c)) return false;
      adj[a].erase(it->first);
      adj[c].erase(it->first);
      adj[a].insert(c);
      adj[c].insert(a);
      adj.erase(it);
      changed = true;
      break;
    }
  }
  std::vector<int> vs;
  for (const auto& [v, nb] : adj) {
    if (nb.size() < 3) return false;
    vs.push_back(v);
  }
  if (vs.size() == 5)
    return std::all_of(adj.begin(), adj.end(), [](const auto& kv) { return kv.second.size() == 4; });
  if (vs.size() != 6) return false;
  std::vector<Edge> edges;
  std::map<int, int> id;
  for (int v : vs) id[v] = static_cast<int>(id.size()) + 1;
  for (const auto& [v, nb] : adj)
    for (int w : nb)
      if (v < w) edges.push_back({id[v], id[w]});
  const Graph h(6, edges);
  const auto colours = bipartition(h);
  if (!colours || h.size() != 9) return false;
  return std::count(colours->begin() + 1, colours->end(), 0) == 3;
}

// Boost's certificate can carry edges beyond the subdivision, so look for
// one inside it by dropping edges.
bool contains_subdivision(std::vector<Edge>& edges, std::size_t from) {
  if (is_kuratowski_subdivision(edges)) return true;
  if (edges.size() <= 9) return false;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Edge e = edges[i];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    const bool found = contains_subdivision(edges, i);
    edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(i), e);
    if (found) return true;
  }
  return false;
}

bool certificate_is_kuratowski(const Graph& g) {
  BGraph b = to_boost(g);
  std::vector<BEdge> cert;
  if (boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                          boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(cert)))
    return false;
  std::vector<Edge> edges;
  for (const auto& e : cert) {
    const int u = static_cast<int>(boost::source(e, b)) + 1;
    const int v = static_cast<int>(boost::target(e, b)) + 1;
    if (!g.has_edge(u, v)) return false;
    edges.push_back(make_edge(u, v));
  }
  return contains_subdivision(edges, 0);
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  Graph g = support::random_graph(rng, n, p);
  const auto order = support::random_permutation(rng, n);
  for (int i = 0; i + 1 < n; ++i) {
    const Edge e = make_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
    if (!g.has_edge(e.u, e.v)) g = add_edge(g, e);
  }
  return g;
}

}  // namespace

TEST(Planarity, KuratowskiGraphs) {
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_TRUE(is_planar(delete_edge(complete_graph(5), make_edge(1, 2))));
  EXPECT_TRUE(is_planar(gen_wheel(9).graph));
  EXPECT_FALSE(is_planar(support::petersen()));
  EXPECT_TRUE(is_planar(Graph()));
}

TEST(Planarity, VerdictBackedByCertificate) {
  std::mt19937 rng(17);
  int planar = 0, nonplanar = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 6;
    const Graph g = random_connected(rng, n, 0.2 + 0.05 * (trial % 8));
    if (is_planar(g)) {
      ++planar;
      EXPECT_TRUE(embedding_satisfies_euler(g)) << to_edge_list(g);
    } else {
      ++nonplanar;
      EXPECT_TRUE(certificate_is_kuratowski(g)) << to_edge_list(g);
    }
  }
  EXPECT_GT(planar, 30);
  EXPECT_GT(nonplanar, 30);
}

TEST(AlmostPlanar, Examples) {
  const auto k5 = is_almost_planar(complete_graph(5));
  EXPECT_TRUE(k5.verdict);
  EXPECT_FALSE(k5.planar);
  EXPECT_EQ(k5.per_edge.size(), 10u);
  EXPECT_FALSE(k5.failing_edge);
  EXPECT_TRUE(is_almost_planar(complete_bipartite(3, 3)).verdict);

  const auto k6 = is_almost_planar(complete_graph(6));
  EXPECT_FALSE(k6.verdict);
  ASSERT_TRUE(k6.failing_edge);
  EXPECT_EQ(*k6.failing_edge, (Edge{1, 2}));

  const auto w = is_almost_planar(gen_wheel(6).graph);
  EXPECT_FALSE(w.verdict);
  EXPECT_TRUE(w.planar);
  EXPECT_FALSE(w.failing_edge);
}

TEST(AlmostPlanar, DisconnectedUnions) {
  EXPECT_FALSE(is_almost_planar(disjoint_union(complete_graph(5), complete_graph(5))).verdict);
  EXPECT_FALSE(is_almost_planar(disjoint_union(complete_bipartite(3, 3), complete_graph(5))).verdict);
  // One non-planar component plus planar junk still meets the definition.
  EXPECT_TRUE(is_almost_planar(disjoint_union(complete_bipartite(3, 3), path_graph(1))).verdict);
}

TEST(AlmostPlanar, ParallelMatchesSerial) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = support::random_graph(rng, 6 + trial % 5, 0.5);
    const auto a = is_almost_planar(g);
    const auto b = is_almost_planar_serial(g);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.failing_edge, b.failing_edge);
    ASSERT_EQ(a.per_edge.size(), b.per_edge.size());
    for (std::size_t i = 0; i < a.per_edge.size(); ++i) {
      EXPECT_EQ(a.per_edge[i].deletion_planar, b.per_edge[i].deletion_planar);
      EXPECT_EQ(a.per_edge[i].contraction_planar, b.per_edge[i].contraction_planar);
    }
  }
}

TEST(AlmostPlanar, MinorMonotoneDeletion) {
  // Deleting an edge of an almost-planar graph leaves it planar or almost-planar.
  for (const Graph& g : {complete_graph(5), complete_bipartite(3, 3), gen_mobius(4).graph, gen_bicycle({7, {}, {}}).graph}) {
    for (const auto& e : g.edges()) {
      const Graph h = delete_edge(g, e);
      EXPECT_TRUE(is_planar(h) || is_almost_planar(h).verdict);
    }
  }
}
