#include "apg/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace apg {

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

namespace {

// Unit-capacity flow on the split graph: vertex x becomes in(x) = 2x and
// out(x) = 2x + 1 joined by a capacity-1 arc; each edge {a, b} becomes
// out(a) -> in(b) and out(b) -> in(a) with capacity 1.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : nodes_(2 * (g.order() + 1)) {
    head_.assign(static_cast<std::size_t>(nodes_), -1);
    for (int x = 1; x <= g.order(); ++x) add_arc(2 * x, 2 * x + 1);
    for (const auto& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  int max_paths(int s, int t, int limit) {
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent_arc(static_cast<std::size_t>(nodes_));
    while (flow < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> q;
      q.push(source);
      parent_arc[static_cast<std::size_t>(source)] = -2;
      while (!q.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
        const int x = q.front();
        q.pop();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const auto& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && parent_arc[static_cast<std::size_t>(arc.to)] == -1) {
            parent_arc[static_cast<std::size_t>(arc.to)] = a;
            q.push(arc.to);
          }
        }
      }
      if (parent_arc[static_cast<std::size_t>(sink)] == -1) break;
      for (int x = sink; x != source;) {
        const int a = parent_arc[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to) {
    arcs_.push_back({to, 1, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int nodes_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, int u, int v, int limit) {
  if (u == v || g.has_edge(u, v)) throw Error("local connectivity needs distinct non-adjacent vertices");
  SplitFlow flow(g);
  return flow.max_paths(u, v, limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  int best = std::max(0, n - 1);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (g.has_edge(u, v)) continue;
      best = std::min(best, local_vertex_connectivity(g, u, v, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw Error("k must be positive");
  const int n = g.order();
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) < k) return false;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (local_vertex_connectivity(g, u, v, k) < k) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  for (int root = 1; root <= n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        auto& cy = color[static_cast<std::size_t>(y)];
        if (cy == -1) {
          cy = 1 - color[static_cast<std::size_t>(x)];
          q.push(y);
        } else if (cy == color[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace apg
