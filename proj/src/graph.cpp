#include "apg/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace apg {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& raw : edges) {
    if (raw.u == raw.v) throw GraphError("loop at vertex " + std::to_string(raw.u));
    const Edge e = make_edge(raw.u, raw.v);
    if (e.u < 1 || e.v > n) throw GraphError("edge " + to_string(e) + " out of range 1.." + std::to_string(n));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw GraphError("duplicate edge " + to_string(*dup));

  adj_.assign(static_cast<std::size_t>(n) + 1, {});
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

static std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.push_back(Edge{a, b});
  return out;
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n, to_edges(edges)) {}

bool Graph::has_edge(int a, int b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  // Search the shorter list; hubs of large bicycle wheels have huge degree.
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto& list = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(n_));
  for (int v = 1; v <= n_; ++v) seq.push_back(degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

Graph delete_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) throw GraphError("no such edge " + to_string(e));
  std::vector<Edge> kept;
  kept.reserve(g.size() - 1);
  for (const auto& f : g.edges())
    if (f != e) kept.push_back(f);
  return Graph(g.order(), kept);
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> all = g.edges();
  all.push_back(e);
  return Graph(g.order(), all);
}

Graph contract_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v)) throw GraphError("no such edge " + to_string(e));
  auto rename = [&](int w) {
    if (w == e.v) w = e.u;
    return w > e.v ? w - 1 : w;
  };
  std::vector<Edge> out;
  out.reserve(g.size());
  for (const auto& f : g.edges()) {
    const int a = rename(f.u);
    const int b = rename(f.v);
    if (a != b) out.push_back(make_edge(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Graph(g.order() - 1, out);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw GraphError("permutation has wrong length");
  std::vector<char> seen(perm.size() + 1, 0);
  for (int p : perm) {
    if (p < 1 || p > g.order() || seen[static_cast<std::size_t>(p)]) throw GraphError("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<Edge> out;
  out.reserve(g.size());
  for (const auto& f : g.edges())
    out.push_back(make_edge(perm[static_cast<std::size_t>(f.u - 1)], perm[static_cast<std::size_t>(f.v - 1)]));
  return Graph(g.order(), out);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> out = a.edges();
  for (const auto& f : b.edges()) out.push_back(Edge{f.u + a.order(), f.v + a.order()});
  return Graph(a.order() + b.order(), out);
}

Graph complete_graph(int n) {
  std::vector<Edge> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.push_back(Edge{u, v});
  return Graph(n, out);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> out;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) out.push_back(Edge{u, v});
  return Graph(a + b, out);
}

Graph cycle_graph(int n) {
  std::vector<Edge> out;
  for (int v = 1; v < n; ++v) out.push_back(Edge{v, v + 1});
  if (n >= 3) out.push_back(Edge{1, n});
  return Graph(n, out);
}

Graph path_graph(int n) {
  std::vector<Edge> out;
  for (int v = 1; v < n; ++v) out.push_back(Edge{v, v + 1});
  return Graph(n, out);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw GraphError("edge list: negative header value");
  if (m > n * (n - 1) / 2) throw GraphError("edge list: more edges than a simple graph allows");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 1 || v < 1 || u > n || v > n)
      throw GraphError("edge list: vertex out of range in line " + std::to_string(i + 2));
    edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
  }
  std::string rest;
  if (in >> rest) throw GraphError("edge list: trailing content '" + rest + "'");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace apg
