#include "apg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>

namespace apg {

namespace {

using Mask = std::uint64_t;

Mask bit(int slot) { return Mask{1} << slot; }

struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;  // slot = vertex - 1
};

BitGraph to_bits(const Graph& g, int cap) {
  cap = std::min(cap, kHardOracleCap);
  if (g.order() > cap)
    throw OracleCapExceeded("instance too large for oracle: n = " + std::to_string(g.order()) +
                            ", cap = " + std::to_string(cap));
  BitGraph b;
  b.n = g.order();
  b.adj.assign(static_cast<std::size_t>(b.n), 0);
  for (const auto& e : g.edges()) {
    b.adj[static_cast<std::size_t>(e.u - 1)] |= bit(e.v - 1);
    b.adj[static_cast<std::size_t>(e.v - 1)] |= bit(e.u - 1);
  }
  return b;
}

// Depth-first search for a cycle on exactly `length` vertices whose smallest
// slot is `start`. Each cycle is met once per direction; only the direction
// with path[1] < path[length - 1] is accepted.
class CycleSearch {
 public:
  CycleSearch(const BitGraph& g, int length) : g_(g), length_(length), path_(static_cast<std::size_t>(length)) {}

  std::optional<VertexSeq> run() {
    for (int s = 0; s < g_.n; ++s) {
      const Mask allowed = ~Mask{0} << (s + 1) & full_mask();
      if (std::popcount(allowed) < length_ - 1) break;
      start_ = s;
      allowed_ = allowed;
      distances_to_start();
      path_[0] = s;
      if (extend(s, 1, bit(s))) {
        VertexSeq out;
        out.reserve(path_.size());
        for (int slot : path_) out.push_back(slot + 1);
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  Mask full_mask() const { return g_.n >= 64 ? ~Mask{0} : (bit(g_.n) - 1); }

  void distances_to_start() {
    dist_.assign(static_cast<std::size_t>(g_.n), std::numeric_limits<int>::max());
    dist_[static_cast<std::size_t>(start_)] = 0;
    Mask frontier = bit(start_);
    Mask seen = frontier;
    for (int d = 1; frontier; ++d) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= g_.adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= allowed_ & ~seen;
      for (Mask f = next; f; f &= f - 1) dist_[static_cast<std::size_t>(std::countr_zero(f))] = d;
      seen |= next;
      frontier = next;
    }
  }

  bool extend(int v, int depth, Mask visited) {
    if (depth == length_) return false;
    const bool last = depth + 1 == length_;
    Mask cand = g_.adj[static_cast<std::size_t>(v)] & allowed_ & ~visited;
    for (; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      const int d = dist_[static_cast<std::size_t>(u)];
      if (d > length_ - depth) continue;
      if (last) {
        if (d == 1 && path_[1] < u) {
          path_[static_cast<std::size_t>(depth)] = u;
          return true;
        }
        continue;
      }
      if (std::popcount(allowed_ & ~visited & ~bit(u)) < length_ - depth - 1) continue;
      path_[static_cast<std::size_t>(depth)] = u;
      if (extend(u, depth + 1, visited | bit(u))) return true;
    }
    return false;
  }

  const BitGraph& g_;
  int length_;
  int start_ = 0;
  Mask allowed_ = 0;
  std::vector<int> dist_;
  std::vector<int> path_;
};

std::optional<VertexSeq> cycle_of_length(const BitGraph& g, int length) {
  if (length < 3 || length > g.n) return std::nullopt;
  return CycleSearch(g, length).run();
}

// Spanning path search from `from` to `to`, pruned by connectivity of the
// unvisited part and by degree counts inside it.
class PathSearch {
 public:
  PathSearch(const BitGraph& g, int from, int to) : g_(g), from_(from), to_(to) {
    full_ = g.n >= 64 ? ~Mask{0} : (bit(g.n) - 1);
  }

  std::optional<VertexSeq> run() {
    path_.assign(1, from_);
    if (g_.n == 1) return std::nullopt;
    if (extend(from_, bit(from_))) {
      VertexSeq out;
      for (int slot : path_) out.push_back(slot + 1);
      return out;
    }
    return std::nullopt;
  }

 private:
  bool feasible(int cur, Mask visited) const {
    const Mask rest = full_ & ~visited;
    const Mask live = rest | bit(cur);
    for (Mask f = rest; f; f &= f - 1) {
      const int w = std::countr_zero(f);
      const int need = w == to_ ? 1 : 2;
      if (std::popcount(g_.adj[static_cast<std::size_t>(w)] & live) < need) return false;
    }
    Mask seen = bit(cur);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= g_.adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= rest & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen & rest) == rest;
  }

  bool extend(int cur, Mask visited) {
    if (visited == full_) return cur == to_;
    if (!feasible(cur, visited)) return false;
    const bool closing = std::popcount(visited) == g_.n - 1;
    for (Mask cand = g_.adj[static_cast<std::size_t>(cur)] & ~visited; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      if (u == to_ && !closing) continue;
      path_.push_back(u);
      if (extend(u, visited | bit(u))) return true;
      path_.pop_back();
    }
    return false;
  }

  const BitGraph& g_;
  int from_;
  int to_;
  Mask full_ = 0;
  std::vector<int> path_;
};

CycleSpectrum assemble(int n, const std::vector<std::optional<VertexSeq>>& found, bool witnesses) {
  CycleSpectrum out;
  out.n = n;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) continue;
    const int length = static_cast<int>(i) + 3;
    out.lengths.insert(length);
    if (witnesses) out.witnesses.emplace(length, *found[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

int oracle_cap_from_env() {
  if (const char* raw = std::getenv("APK_ORACLE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value >= 1) return static_cast<int>(std::min<long>(value, kHardOracleCap));
  }
  return kDefaultOracleCap;
}

bool CycleSpectrum::is_full() const {
  if (n < 3) return false;
  return static_cast<int>(lengths.size()) == n - 2;
}

CycleSpectrum cycle_spectrum_serial(const Graph& g, bool witnesses, int cap) {
  const BitGraph bits = to_bits(g, cap);
  const int count = std::max(0, g.order() - 2);
  std::vector<std::optional<VertexSeq>> found(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) found[static_cast<std::size_t>(i)] = cycle_of_length(bits, i + 3);
  return assemble(g.order(), found, witnesses);
}

CycleSpectrum cycle_spectrum(const Graph& g, bool witnesses, int cap) {
  const BitGraph bits = to_bits(g, cap);
  const int count = std::max(0, g.order() - 2);
  std::vector<std::optional<VertexSeq>> found(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) found[static_cast<std::size_t>(i)] = cycle_of_length(bits, i + 3);
  return assemble(g.order(), found, witnesses);
}

std::optional<VertexSeq> find_cycle(const Graph& g, int length, int cap) {
  return cycle_of_length(to_bits(g, cap), length);
}

bool is_pancyclic(const Graph& g, int cap) { return cycle_spectrum(g, false, cap).is_full(); }

std::optional<VertexSeq> hamiltonian_cycle(const Graph& g, int cap) { return find_cycle(g, g.order(), cap); }

std::optional<VertexSeq> hamiltonian_path(const Graph& g, int u, int v, int cap) {
  const BitGraph bits = to_bits(g, cap);
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v) throw Error("hamiltonian_path needs two distinct vertices");
  return PathSearch(bits, u - 1, v - 1).run();
}

HamConnectivity is_hamiltonian_connected_serial(const Graph& g, int cap) {
  const BitGraph bits = to_bits(g, cap);
  for (auto [u, v] : all_pairs(g.order()))
    if (!PathSearch(bits, u - 1, v - 1).run()) return {false, std::make_pair(u, v)};
  return {g.order() >= 1, std::nullopt};
}

HamConnectivity is_hamiltonian_connected(const Graph& g, int cap) {
  const BitGraph bits = to_bits(g, cap);
  const auto pairs = all_pairs(g.order());
  std::vector<char> ok(pairs.size(), 0);
  const long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto [u, v] = pairs[static_cast<std::size_t>(i)];
    ok[static_cast<std::size_t>(i)] = PathSearch(bits, u - 1, v - 1).run().has_value() ? 1 : 0;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!ok[i]) return {false, pairs[i]};
  return {g.order() >= 1, std::nullopt};
}

std::string to_string(CycleFault f) {
  switch (f) {
    case CycleFault::none: return "ok";
    case CycleFault::too_short: return "too short";
    case CycleFault::wrong_length: return "wrong length";
    case CycleFault::vertex_out_of_range: return "vertex out of range";
    case CycleFault::duplicate_vertex: return "duplicate vertex";
    case CycleFault::missing_edge: return "missing edge";
  }
  return "?";
}

namespace {

CycleCheck check_sequence(const Graph& g, const VertexSeq& c, int expect_length, bool closed) {
  auto fail = [](CycleFault f, std::string detail) { return CycleCheck{false, f, std::move(detail)}; };
  const int len = static_cast<int>(c.size());
  if (len != expect_length)
    return fail(CycleFault::wrong_length, "expected " + std::to_string(expect_length) + " vertices, got " +
                                              std::to_string(len));
  if (closed && len < 3) return fail(CycleFault::too_short, "a cycle needs at least 3 vertices");
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int v : c) {
    if (!g.has_vertex(v)) return fail(CycleFault::vertex_out_of_range, "vertex " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v)]) return fail(CycleFault::duplicate_vertex, "vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 0; i + 1 < len; ++i) {
    const int a = c[static_cast<std::size_t>(i)];
    const int b = c[static_cast<std::size_t>(i) + 1];
    if (!g.has_edge(a, b)) return fail(CycleFault::missing_edge, to_string(make_edge(a, b)));
  }
  if (closed && !g.has_edge(c.back(), c.front()))
    return fail(CycleFault::missing_edge, to_string(make_edge(c.back(), c.front())));
  return CycleCheck{true, CycleFault::none, {}};
}

}  // namespace

CycleCheck validate_cycle(const Graph& g, const VertexSeq& c, int expect_length) {
  return check_sequence(g, c, expect_length, true);
}

CycleCheck validate_path(const Graph& g, const VertexSeq& p, int expect_length) {
  return check_sequence(g, p, expect_length, false);
}

}  // namespace apg
