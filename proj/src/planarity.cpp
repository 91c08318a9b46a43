#include "apg/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace apg {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges())
    boost::add_edge(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1), bg);
  return bg;
}

EdgeEvidence check_edge(const Graph& g, Edge e) {
  return EdgeEvidence{e, is_planar(delete_edge(g, e)), is_planar(contract_edge(g, e))};
}

void finish(AlmostPlanarEvidence& out) {
  out.verdict = !out.planar;
  for (const auto& row : out.per_edge) {
    if (!row.deletion_planar && !row.contraction_planar) {
      out.verdict = false;
      if (!out.planar && !out.failing_edge) out.failing_edge = row.edge;
    }
  }
}

}  // namespace

bool is_planar(const Graph& g) {
  // Euler bound; Boyer-Myrvold would reject these too, only slower.
  if (g.order() >= 3 && g.size() > 3 * static_cast<std::size_t>(g.order()) - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

AlmostPlanarEvidence is_almost_planar_serial(const Graph& g) {
  AlmostPlanarEvidence out;
  out.planar = is_planar(g);
  out.per_edge.reserve(g.size());
  for (const auto& e : g.edges()) out.per_edge.push_back(check_edge(g, e));
  finish(out);
  return out;
}

AlmostPlanarEvidence is_almost_planar(const Graph& g) {
  AlmostPlanarEvidence out;
  out.planar = is_planar(g);
  const auto& edges = g.edges();
  const auto m = static_cast<long>(edges.size());
  out.per_edge.resize(edges.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i)
    out.per_edge[static_cast<std::size_t>(i)] = check_edge(g, edges[static_cast<std::size_t>(i)]);
  finish(out);
  return out;
}

}  // namespace apg
