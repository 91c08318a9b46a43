#pragma once

#include <optional>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

/// Vertex bijection g1 -> g2, indexed by g1 vertex (entry 0 unused).
using VertexMap = std::vector<int>;

/// Exact isomorphism test for small graphs: colour refinement on both graphs
/// with a shared colour table, then individualise-and-refine backtracking.
/// Returns a bijection mapping edges onto edges, or nullopt.
std::optional<VertexMap> find_isomorphism(const Graph& g1, const Graph& g2);

inline bool are_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

/// True iff map is a bijection carrying E(g1) exactly onto E(g2).
bool is_isomorphism(const Graph& g1, const Graph& g2, const VertexMap& map);

}  // namespace apg
