#include "apg/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace apg {

namespace {

// Both graphs live side by side: g1 vertex v is slot v - 1, g2 vertex v is
// slot n + v - 1. Colours are shared, so equal colours mean "may correspond".
class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {
    adj_.resize(static_cast<std::size_t>(2 * n_));
    for (int v = 1; v <= n_; ++v) {
      for (int w : g1.neighbors(v)) adj_[slot1(v)].push_back(static_cast<int>(slot1(w)));
      for (int w : g2.neighbors(v)) adj_[slot2(v)].push_back(static_cast<int>(slot2(w)));
    }
  }

  std::optional<VertexMap> run() {
    std::vector<int> colors(static_cast<std::size_t>(2 * n_), 0);
    if (!refine(colors)) return std::nullopt;
    return search(colors);
  }

 private:
  std::size_t slot1(int v) const { return static_cast<std::size_t>(v - 1); }
  std::size_t slot2(int v) const { return static_cast<std::size_t>(n_ + v - 1); }

  // Iterated 1-WL refinement. Returns false as soon as the two sides disagree
  // on some colour class size.
  bool refine(std::vector<int>& colors) const {
    const std::size_t total = colors.size();
    std::size_t classes = count_classes(colors);
    for (;;) {
      std::vector<std::vector<int>> sig(total);
      for (std::size_t x = 0; x < total; ++x) {
        auto& s = sig[x];
        s.push_back(colors[x]);
        std::vector<int> nb;
        nb.reserve(adj_[x].size());
        for (int y : adj_[x]) nb.push_back(colors[static_cast<std::size_t>(y)]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::map<std::vector<int>, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (std::size_t x = 0; x < total; ++x) colors[x] = ids[sig[x]];
      if (!balanced(colors)) return false;
      const std::size_t now = ids.size();
      if (now == classes) return true;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool balanced(const std::vector<int>& colors) const {
    std::map<int, int> diff;
    for (int v = 1; v <= n_; ++v) {
      ++diff[colors[slot1(v)]];
      --diff[colors[slot2(v)]];
    }
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  std::optional<VertexMap> search(const std::vector<int>& colors) const {
    std::map<int, std::vector<int>> left;
    for (int v = 1; v <= n_; ++v) left[colors[slot1(v)]].push_back(v);

    const std::vector<int>* target = nullptr;
    int target_color = 0;
    for (const auto& [c, members] : left) {
      if (members.size() > 1 && (target == nullptr || members.size() < target->size())) {
        target = &members;
        target_color = c;
      }
    }

    if (target == nullptr) {
      VertexMap map(static_cast<std::size_t>(n_) + 1, 0);
      std::map<int, int> right;
      for (int v = 1; v <= n_; ++v) right[colors[slot2(v)]] = v;
      for (int v = 1; v <= n_; ++v) map[static_cast<std::size_t>(v)] = right[colors[slot1(v)]];
      if (is_isomorphism(g1_, g2_, map)) return map;
      return std::nullopt;
    }

    const int v = target->front();
    const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (int w = 1; w <= n_; ++w) {
      if (colors[slot2(w)] != target_color) continue;
      std::vector<int> next = colors;
      next[slot1(v)] = fresh;
      next[slot2(w)] = fresh;
      if (!refine(next)) continue;
      if (auto found = search(next)) return found;
    }
    return std::nullopt;
  }

  const Graph& g1_;
  const Graph& g2_;
  int n_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const VertexMap& map) {
  const int n = g1.order();
  if (g2.order() != n || g1.size() != g2.size()) return false;
  if (map.size() != static_cast<std::size_t>(n) + 1) return false;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    const int w = map[static_cast<std::size_t>(v)];
    if (w < 1 || w > n || used[static_cast<std::size_t>(w)]) return false;
    used[static_cast<std::size_t>(w)] = 1;
  }
  for (const auto& e : g1.edges())
    if (!g2.has_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)])) return false;
  return true;
}

std::optional<VertexMap> find_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (g1.degree_sequence() != g2.degree_sequence()) return std::nullopt;
  if (g1.order() == 0) return VertexMap{0};
  return Matcher(g1, g2).run();
}

}  // namespace apg
