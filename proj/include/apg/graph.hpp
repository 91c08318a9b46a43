#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apg {

/// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: bad edge list, loop, duplicate, out-of-range vertex.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(const Edge& e);

/// Ordered list of distinct vertices. Closes implicitly when read as a cycle.
using VertexSeq = std::vector<int>;

/// Simple undirected graph on vertices 1..n.
///
/// Immutable once built: every operation below returns a new value. Edges are
/// kept sorted, and each adjacency list is sorted, so iteration order is
/// deterministic everywhere.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on loops, duplicates or endpoints outside 1..n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int a, int b) const;
  bool has_vertex(int v) const { return v >= 1 && v <= n_; }

  /// Degrees sorted descending.
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // index 0 unused
};

Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

/// Identifies the endpoints of e. The merged vertex keeps min(u, v); vertices
/// numbered above max(u, v) shift down by one. Loops vanish and parallel
/// edges collapse.
Graph contract_edge(const Graph& g, Edge e);

/// Renames vertex v to perm[v - 1]. perm must be a permutation of 1..n.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Edge-list text: "n m" then m lines "u v" with u < v.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace apg
