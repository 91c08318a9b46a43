#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "apg/graph.hpp"

namespace apg::support {

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph petersen() {
  return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                    {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

inline Graph prism() { return Graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}}); }

// Cycle lengths by subset dynamic programming: paths from the minimum vertex
// of each vertex set, closed when the far end touches the start.
inline std::set<int> subset_dp_spectrum(const Graph& g) {
  const int n = g.order();
  std::set<int> out;
  std::vector<unsigned> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)] |= 1u << (e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)] |= 1u << (e.u - 1);
  }
  const unsigned full = 1u << n;
  std::vector<unsigned> reach(full, 0);  // reach[mask]: possible path ends
  for (int s = 0; s < n; ++s) {
    std::fill(reach.begin(), reach.end(), 0u);
    reach[1u << s] = 1u << s;
    for (unsigned mask = 1u << s; mask < full; ++mask) {
      if (!(mask >> s & 1u) || (mask & ((1u << s) - 1))) continue;
      const unsigned ends = reach[mask];
      if (!ends) continue;
      const int size = __builtin_popcount(mask);
      if (size >= 3 && (ends & adj[static_cast<std::size_t>(s)])) out.insert(size);
      for (unsigned e = ends; e; e &= e - 1) {
        const int v = __builtin_ctz(e);
        unsigned next = adj[static_cast<std::size_t>(v)] & ~mask & ~((1u << s) - 1);
        for (; next; next &= next - 1) {
          const int w = __builtin_ctz(next);
          reach[mask | 1u << w] |= 1u << w;
        }
      }
    }
  }
  return out;
}

}  // namespace apg::support
