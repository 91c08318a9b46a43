#pragma once

#include <optional>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

bool is_connected(const Graph& g);

/// Maximum number of internally vertex-disjoint u-v paths, stopping early
/// once `limit` paths are found. u and v must be distinct and non-adjacent.
int local_vertex_connectivity(const Graph& g, int u, int v, int limit);

/// Exact vertex connectivity (n - 1 for complete graphs).
int vertex_connectivity(const Graph& g);

/// True iff n >= k + 1 and no set of fewer than k vertices separates g.
/// Decided by Menger: every non-adjacent pair needs k disjoint paths.
bool is_k_connected(const Graph& g, int k);

/// 2-coloring indexed by vertex (entry 0 unused), or nullopt if an odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace apg
