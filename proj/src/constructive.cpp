#include "apg/constructive.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>

#include "apg/classify.hpp"

namespace apg {

namespace {

VertexSeq checked(const LabeledInstance& inst, VertexSeq seq, int length, const char* what) {
  if (auto check = validate_cycle(inst.graph, seq, length); !check)
    throw ConstructionError(std::string(what) + ": built sequence is not a " + std::to_string(length) +
                            "-cycle (" + to_string(check.fault) + ": " + check.detail + ")");
  return seq;
}

void require_range(int length, int lo, int hi, const char* what) {
  if (length < lo || length > hi)
    throw ConstructionError(std::string(what) + ": length " + std::to_string(length) + " outside " +
                            std::to_string(lo) + ".." + std::to_string(hi));
}

const BicycleSpec& bicycle_spec(const LabeledInstance& inst, const char* what) {
  const auto* spec = std::get_if<BicycleSpec>(&inst.spec);
  if (!spec) throw ConstructionError(std::string(what) + ": not a bicycle-wheel instance");
  return *spec;
}

const BicycleSpec& full_bicycle(const LabeledInstance& inst, const char* what) {
  const auto& spec = bicycle_spec(inst, what);
  if (!spec.removed_s.empty() || !spec.removed_t.empty())
    throw ConstructionError(std::string(what) + ": needs the full bicycle wheel");
  return spec;
}

const HSpec& h_spec(const LabeledInstance& inst, HFamily family, const char* what) {
  const auto* spec = std::get_if<HSpec>(&inst.spec);
  if (!spec || spec->family != family)
    throw ConstructionError(std::string(what) + ": wrong instance family");
  return *spec;
}

// Rim vertex i of a bicycle instance is vertex i; hubs sit at n-1 (t) and n (s).
struct Bike {
  int n;
  int rim;
  int s;
  int t;
  explicit Bike(const LabeledInstance& inst) : n(inst.graph.order()), rim(n - 2), s(n), t(n - 1) {}
  int at(int i) const { return rim_index(rim, i); }
};

// Vertices of an H instance by role.
struct HView {
  int a, b, c;
  std::vector<int> x, y, z;  // index 1..len, slot 0 unused

  explicit HView(const LabeledInstance& inst) {
    const auto& spec = std::get<HSpec>(inst.spec);
    a = inst.vertex(VertexKind::a);
    b = inst.vertex(VertexKind::b);
    c = inst.vertex(VertexKind::c);
    x.assign(static_cast<std::size_t>(spec.p) + 1, 0);
    y.assign(static_cast<std::size_t>(spec.q) + 1, 0);
    z.assign(static_cast<std::size_t>(spec.r) + 1, 0);
    for (std::size_t v = 1; v < inst.vertex_roles.size(); ++v) {
      const auto& role = inst.vertex_roles[v];
      const auto slot = static_cast<std::size_t>(role.index);
      if (role.kind == VertexKind::x) x[slot] = static_cast<int>(v);
      if (role.kind == VertexKind::y) y[slot] = static_cast<int>(v);
      if (role.kind == VertexKind::z) z[slot] = static_cast<int>(v);
    }
  }
  int p() const { return static_cast<int>(x.size()) - 1; }
  int q() const { return static_cast<int>(y.size()) - 1; }
  int r() const { return static_cast<int>(z.size()) - 1; }
};

// Append series[from..to] (inclusive, either direction).
void run(VertexSeq& out, const std::vector<int>& series, int from, int to) {
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    out.push_back(series[static_cast<std::size_t>(i)]);
    if (i == to) break;
  }
}

// Hub plus a window of `length - 1` consecutive vertices of `seq` whose two
// ends are joined to the hub.
std::optional<VertexSeq> hub_window(const Graph& g, int hub, const VertexSeq& seq, int length) {
  const int w = length - 1;
  const int len = static_cast<int>(seq.size());
  for (int s = 0; s + w <= len; ++s) {
    const int first = seq[static_cast<std::size_t>(s)];
    const int last = seq[static_cast<std::size_t>(s + w - 1)];
    if (!g.has_edge(hub, first) || !g.has_edge(hub, last)) continue;
    VertexSeq out{hub};
    out.insert(out.end(), seq.begin() + s, seq.begin() + s + w);
    if (validate_cycle(g, out, length)) return out;
  }
  return std::nullopt;
}

}  // namespace

VertexSeq mobius_cycle(const LabeledInstance& inst, int length) {
  const auto* spec = std::get_if<MobiusSpec>(&inst.spec);
  if (!spec) throw ConstructionError("mobius_cycle: not a Mobius ladder instance");
  const int k = spec->k;
  require_range(length, 4, 2 * k, "mobius_cycle");
  VertexSeq out;
  out.reserve(static_cast<std::size_t>(length));
  if (length % 2 == 0) {
    const int t = length / 2;
    for (int i = 1; i <= t; ++i) out.push_back(i);
    for (int i = k + t; i >= k + 1; --i) out.push_back(i);
    return checked(inst, std::move(out), length, "mobius_cycle");
  }
  if (k % 2 != 0 || length < k + 1)
    throw ConstructionError("mobius_cycle: no odd cycle of length " + std::to_string(length) + " for k = " +
                            std::to_string(k));
  // Path 1..k, twist to k+1, rung back to 1: k+1 vertices. Each detour at an
  // odd step j swaps the side edge (j+1, j+2) for rung, side, rung through
  // k+1+j and k+2+j, adding two vertices.
  const int detours = (length - k - 1) / 2;
  out.push_back(1);
  for (int j = 0; j < k; ++j) {
    if (j % 2 == 1 && j / 2 < detours) {
      out.push_back(k + 1 + j);
      out.push_back(k + 2 + j);
    }
    out.push_back(j + 2);
  }
  return checked(inst, std::move(out), length, "mobius_cycle");
}

VertexSeq bicycle_cycle(const LabeledInstance& inst, int length) {
  full_bicycle(inst, "bicycle_cycle");
  const Bike bk(inst);
  require_range(length, 3, bk.n, "bicycle_cycle");
  VertexSeq out{bk.s};
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 1; i <= length - 2; ++i) out.push_back(i);
  out.push_back(bk.t);
  return checked(inst, std::move(out), length, "bicycle_cycle");
}

VertexSeq bicycle_ham_path(const LabeledInstance& inst, int u, int v) {
  full_bicycle(inst, "bicycle_ham_path");
  const Bike bk(inst);
  if (u == v || !inst.graph.has_vertex(u) || !inst.graph.has_vertex(v))
    throw ConstructionError("bicycle_ham_path: needs two distinct vertices");
  auto is_hub = [&](int x) { return x == bk.s || x == bk.t; };
  VertexSeq out;
  out.reserve(static_cast<std::size_t>(bk.n));
  bool reversed = false;
  if (is_hub(u) && is_hub(v)) {
    out.push_back(u);
    for (int i = 1; i <= bk.rim; ++i) out.push_back(u == bk.s ? i : bk.rim + 1 - i);
    out.push_back(v);
  } else if (is_hub(u) || is_hub(v)) {
    reversed = !is_hub(u);
    const int h = reversed ? v : u;
    const int j = reversed ? u : v;
    out.push_back(h);
    out.push_back(h == bk.s ? bk.t : bk.s);
    for (int step = 1; step <= bk.rim; ++step) out.push_back(bk.at(j + step));
  } else if (bk.at(u + 1) == v || bk.at(v + 1) == u) {
    // a, a-1, ..., b+1 backwards around the rim, then both hubs, then b = a+1.
    const int a = bk.at(u + 1) == v ? u : v;
    const int b = bk.at(a + 1);
    reversed = a != u;
    for (int step = 0; step < bk.rim - 1; ++step) out.push_back(bk.at(a - step));
    out.push_back(bk.s);
    out.push_back(bk.t);
    out.push_back(b);
  } else {
    // i..j-1 forwards, hubs, then i-1 backwards down to j.
    const int i = std::min(u, v);
    const int j = std::max(u, v);
    reversed = i != u;
    for (int x = i; x <= j - 1; ++x) out.push_back(x);
    out.push_back(bk.s);
    out.push_back(bk.t);
    for (int x = i - 1; bk.at(x) != j; --x) out.push_back(bk.at(x));
    out.push_back(j);
  }
  if (reversed) std::reverse(out.begin(), out.end());
  if (auto check = validate_path(inst.graph, out, bk.n); !check || out.front() != u || out.back() != v)
    throw ConstructionError("bicycle_ham_path: built sequence is not a spanning " + std::to_string(u) + "-" +
                            std::to_string(v) + " path (" + to_string(check.fault) + ": " + check.detail + ")");
  return out;
}

VertexSeq b_graph_ham_cycle(const LabeledInstance& inst) {
  bicycle_spec(inst, "b_graph_ham_cycle");
  const Bike bk(inst);
  const Graph& g = inst.graph;
  for (int swap = 0; swap < 2; ++swap) {
    const int first = swap ? bk.t : bk.s;
    const int second = swap ? bk.s : bk.t;
    for (int i = 1; i <= bk.rim; ++i) {
      if (!g.has_edge(first, bk.at(i - 1)) || !g.has_edge(second, i)) continue;
      VertexSeq out;
      out.reserve(static_cast<std::size_t>(bk.n));
      for (int step = 0; step < bk.rim; ++step) out.push_back(bk.at(i + step));
      out.push_back(first);
      out.push_back(second);
      return checked(inst, std::move(out), bk.n, "b_graph_ham_cycle");
    }
  }
  throw ConstructionError("b_graph_ham_cycle: no consecutive rim vertices on different hubs");
}

VertexSeq a_even_cycle(const LabeledInstance& inst, int length) {
  bicycle_spec(inst, "a_even_cycle");
  const Bike bk(inst);
  const Graph& g = inst.graph;
  auto hub_of = [&](int i) {
    const bool s = g.has_edge(bk.s, i);
    const bool t = g.has_edge(bk.t, i);
    return s == t ? 0 : (s ? bk.s : bk.t);
  };
  if (bk.n % 2 != 0) throw ConstructionError("a_even_cycle: needs an even number of vertices");
  for (int i = 1; i <= bk.rim; ++i)
    if (hub_of(i) == 0 || hub_of(i) == hub_of(bk.at(i + 1)))
      throw ConstructionError("a_even_cycle: spokes do not alternate between the hubs");
  if (length % 2 != 0)
    throw ConstructionError("a_even_cycle: only even cycles exist, got length " + std::to_string(length));
  require_range(length, 4, bk.n, "a_even_cycle");
  VertexSeq out;
  out.reserve(static_cast<std::size_t>(length));
  if (length < bk.n) {
    out.push_back(hub_of(1));
    for (int i = 1; i <= length - 1; ++i) out.push_back(i);
  } else {
    out = {hub_of(1), 1, 2, hub_of(2)};
    for (int i = bk.rim; i >= 3; --i) out.push_back(i);
  }
  return checked(inst, std::move(out), length, "a_even_cycle");
}

VertexSeq b_adjacent_spoke_cycle(const LabeledInstance& inst, int length) {
  bicycle_spec(inst, "b_adjacent_spoke_cycle");
  const Bike bk(inst);
  const Graph& g = inst.graph;
  require_range(length, 3, bk.n, "b_adjacent_spoke_cycle");
  if (length == bk.n) return b_graph_ham_cycle(inst);
  for (int swap = 0; swap < 2; ++swap) {
    const int hub = swap ? bk.t : bk.s;
    const int other = swap ? bk.s : bk.t;
    for (int i = 1; i <= bk.rim; ++i) {
      if (!g.has_edge(hub, i) || !g.has_edge(hub, bk.at(i + 1))) continue;
      VertexSeq out{hub};
      out.reserve(static_cast<std::size_t>(length));
      const int last = bk.at(i + length - 2);
      if (length == 3 || g.has_edge(hub, last)) {
        for (int step = 0; step <= length - 2; ++step) out.push_back(bk.at(i + step));
      } else {
        for (int step = 1; step <= length - 2; ++step) out.push_back(bk.at(i + step));
        out.push_back(other);
      }
      return checked(inst, std::move(out), length, "b_adjacent_spoke_cycle");
    }
  }
  throw ConstructionError("b_adjacent_spoke_cycle: no adjacent rim vertices share a hub");
}

VertexSeq wheel_cycle(const LabeledInstance& inst, int length) {
  if (!std::holds_alternative<WheelSpec>(inst.spec)) throw ConstructionError("wheel_cycle: not a wheel instance");
  const int n = inst.graph.order();
  require_range(length, 3, n, "wheel_cycle");
  VertexSeq out{1, n};
  out.reserve(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 2; --i) out.push_back(i);
  return checked(inst, std::move(out), length, "wheel_cycle");
}

VertexSeq h1_cycle(const LabeledInstance& inst, int length) {
  h_spec(inst, HFamily::h1, "h1_cycle");
  const HView h(inst);
  const Graph& g = inst.graph;
  const int n = g.order();
  const int p = h.p(), q = h.q(), r = h.r();
  require_range(length, 3, n, "h1_cycle");

  // Spanning path x1..xp, a, zr..z1, c, yq..y1; closing through b gives the
  // Hamiltonian cycle and windows of it give most shorter lengths.
  VertexSeq rim;
  run(rim, h.x, 1, p);
  rim.push_back(h.a);
  run(rim, h.z, r, 1);
  rim.push_back(h.c);
  run(rim, h.y, q, 1);
  if (length == n) {
    VertexSeq out = rim;
    out.push_back(h.b);
    return checked(inst, std::move(out), length, "h1_cycle");
  }

  // Short cycles through b that skip x1 or y1.
  std::vector<VertexSeq> rows;
  auto row = [&](const std::vector<int>& head, int from, int corner, const std::vector<int>& tail, int t0, int t1) {
    VertexSeq out{h.b};
    run(out, head, from, static_cast<int>(head.size()) - 1);
    out.push_back(corner);
    run(out, tail, t0, t1);
    rows.push_back(std::move(out));
  };
  if (p >= 2) {
    row(h.x, 2, h.a, h.z, r, r);
    row(h.x, 2, h.a, h.y, 1, q);
    row(h.x, 2, h.a, h.z, r, 1);
  }
  if (q >= 2) {
    row(h.y, 2, h.c, h.z, 1, 1);
    row(h.y, 2, h.c, h.z, 1, r);
  }
  if (r >= 2) row(h.z, 2, h.a, h.x, p, p);
  for (const auto& seq : rows)
    if (static_cast<int>(seq.size()) == length && validate_cycle(g, seq, length)) return seq;

  if (auto w = hub_window(g, h.b, rim, length)) return *w;
  VertexSeq alt;
  run(alt, h.z, 1, r);
  alt.push_back(h.a);
  run(alt, h.x, p, 1);
  alt.push_back(h.c);
  run(alt, h.y, q, 1);
  if (auto w = hub_window(g, h.b, alt, length)) return *w;
  throw ConstructionError("h1_cycle: no construction for length " + std::to_string(length));
}

VertexSeq h2_cycle(const LabeledInstance& inst, int length) {
  h_spec(inst, HFamily::h2, "h2_cycle");
  const HView h(inst);
  const Graph& g = inst.graph;
  const int n = g.order();
  const int p = h.p(), q = h.q(), r = h.r();
  require_range(length, 3, n, "h2_cycle");

  // Skip the first i of x2.., j of y.., k of z.. from the Hamiltonian cycle.
  auto avoiding = [&](int i, int j, int k) {
    VertexSeq out{h.a};
    run(out, h.z, r - k, 1);
    out.push_back(h.c);
    run(out, h.y, q, j + 1);
    out.push_back(h.b);
    run(out, h.x, i + 1, p);
    return out;
  };
  if (length == n) {
    VertexSeq out{h.a};
    run(out, h.x, p, 1);
    out.push_back(h.b);
    run(out, h.y, 1, q);
    out.push_back(h.c);
    run(out, h.z, 1, r);
    return checked(inst, std::move(out), length, "h2_cycle");
  }
  if (length >= 6) {
    int rest = n - length;
    const int i = std::min(rest, p - 1);
    rest -= i;
    const int j = std::min(rest, q - 1);
    rest -= j;
    const int k = std::min(rest, r - 1);
    rest -= k;
    if (rest == 0) {
      if (auto seq = avoiding(i, j, k); validate_cycle(g, seq, length)) return seq;
    }
  }
  VertexSeq sb;
  run(sb, h.x, p, 1);
  sb.push_back(h.c);
  run(sb, h.y, q, 1);
  if (auto w = hub_window(g, h.b, sb, length)) return *w;
  VertexSeq sa;
  run(sa, h.z, r, 1);
  sa.push_back(h.c);
  run(sa, h.y, q, 1);
  if (auto w = hub_window(g, h.a, sa, length)) return *w;
  throw ConstructionError("h2_cycle: no construction for length " + std::to_string(length));
}

VertexSeq k33_chain_cycle(const LabeledInstance& inst, int length) {
  const Graph& g = inst.graph;
  if (g.order() != 6) throw ConstructionError("k33_chain_cycle: needs a 6-vertex K3,3 instance");
  const int a = inst.vertex(VertexKind::a);
  const int b = inst.vertex(VertexKind::b);
  const int c = inst.vertex(VertexKind::c);
  const int x = inst.vertex(VertexKind::x, 1);
  const int y = inst.vertex(VertexKind::y, 1);
  const int z = inst.vertex(VertexKind::z, 1);
  require_range(length, 3, 6, "k33_chain_cycle");
  if (length == 4) return checked(inst, {a, x, b, y}, 4, "k33_chain_cycle");
  if (length == 6) return checked(inst, {a, x, b, y, c, z}, 6, "k33_chain_cycle");
  // Odd lengths need a corner edge uv; w is the remaining corner.
  for (auto [u, v, w] : {std::array{a, b, c}, std::array{b, c, a}, std::array{a, c, b}}) {
    if (!g.has_edge(u, v)) continue;
    if (length == 3) return checked(inst, {u, x, v}, 3, "k33_chain_cycle");
    return checked(inst, {u, v, x, w, y}, 5, "k33_chain_cycle");
  }
  throw ConstructionError("k33_chain_cycle: K3,3 without corner edges is bipartite, no cycle of length " +
                          std::to_string(length));
}

namespace {

std::function<VertexSeq(const LabeledInstance&, int)> builder_for(const LabeledInstance& inst) {
  return std::visit(
      [&](const auto& s) -> std::function<VertexSeq(const LabeledInstance&, int)> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, MobiusSpec>) {
          return mobius_cycle;
        } else if constexpr (std::is_same_v<S, WheelSpec>) {
          return wheel_cycle;
        } else if constexpr (std::is_same_v<S, K33ChainSpec>) {
          return k33_chain_cycle;
        } else if constexpr (std::is_same_v<S, HSpec>) {
          if (s.p == 1 && s.q == 1 && s.r == 1) return k33_chain_cycle;
          return s.family == HFamily::h1 ? h1_cycle : h2_cycle;
        } else {
          if (s.removed_s.empty() && s.removed_t.empty()) return bicycle_cycle;
          const Bike bk(inst);
          const Graph& g = inst.graph;
          for (int i = 1; i <= bk.rim; ++i)
            for (int hub : {bk.s, bk.t})
              if (g.has_edge(hub, i) && g.has_edge(hub, bk.at(i + 1))) return b_adjacent_spoke_cycle;
          return a_even_cycle;
        }
      },
      inst.spec);
}

}  // namespace

CycleSpectrum constructive_spectrum(const FamilySpec& spec) {
  const auto prediction = predict_spectrum(spec);
  if (!prediction.exact)
    throw ConstructionError("no constructive spectrum for " + describe(spec) + ": " + prediction.note);
  const auto inst = generate(spec);
  const auto build = builder_for(inst);
  CycleSpectrum out;
  out.n = inst.graph.order();
  for (int length : prediction.lengths) {
    out.lengths.insert(length);
    out.witnesses.emplace(length, build(inst, length));
  }
  return out;
}

VertexSeq walk_edges(const LabeledInstance& inst, const std::vector<EdgeRole>& walk) {
  std::map<EdgeRole, Edge> by_role;
  for (const auto& [e, role] : inst.edge_roles) by_role.emplace(role, e);
  auto edge = [&](const EdgeRole& role) {
    auto it = by_role.find(role);
    if (it == by_role.end()) throw ConstructionError("walk uses absent edge " + role_name(role));
    return it->second;
  };
  VertexSeq out;
  if (walk.empty()) return out;
  const Edge first = edge(walk.front());
  int cur = first.u;
  if (walk.size() > 1) {
    const Edge second = edge(walk[1]);
    if (first.u == second.u || first.u == second.v) cur = first.v;
  }
  out.push_back(cur);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const Edge e = edge(walk[i]);
    if (e.u == cur) {
      cur = e.v;
    } else if (e.v == cur) {
      cur = e.u;
    } else {
      out.push_back(e.u);
      cur = e.v;
    }
    out.push_back(cur);
  }
  // The last edge closes the cycle back onto the first vertex.
  return out;
}

namespace naive {

VertexSeq mobius_even_cycle(int k, int t) {
  VertexSeq out;
  for (int i = 1; i <= t / 2; ++i) out.push_back(i);
  for (int i = k + t / 2; i >= k + 1; --i) out.push_back(i);
  return out;
}

VertexSeq mobius_hamiltonian(int k) {
  VertexSeq out;
  for (int i = 1; i <= k - 1; ++i) out.push_back(i);
  out.push_back(2 * k);
  out.push_back(k);
  for (int i = 2 * k - 1; i >= k + 1; --i) out.push_back(i);
  return out;
}

VertexSeq mobius_k_plus_one(int k) {
  VertexSeq out;
  for (int i = 1; i <= k - 1; ++i) out.push_back(i);
  out.push_back(2 * k);
  out.push_back(k);
  return out;
}

VertexSeq bicycle_nonadjacent_path(int n, int i, int j) {
  VertexSeq out;
  for (int x = i; x <= j - 1; ++x) out.push_back(x);
  for (int x = n; x >= j - 1; --x) out.push_back(x);
  out.push_back(j);
  return out;
}

VertexSeq a_graph_hamiltonian(const LabeledInstance& inst) {
  const int n = inst.graph.order();
  std::vector<EdgeRole> walk{{EdgeKind::s_spoke, 1}, {EdgeKind::rim, 1}, {EdgeKind::t_spoke, 2},
                             {EdgeKind::t_spoke, n - 2}};
  for (int i = n - 2; i >= 3; --i) walk.push_back({EdgeKind::rim, i});
  walk.push_back({EdgeKind::s_spoke, 3});
  return walk_edges(inst, walk);
}

VertexSeq b_adjacent_spoke_cycle(const LabeledInstance& inst, int i, int k) {
  const int rim = inst.graph.order() - 2;
  std::vector<EdgeRole> walk{{EdgeKind::s_spoke, i}};
  for (int j = i; j <= i + k - 2; ++j) walk.push_back({EdgeKind::rim, rim_index(rim, j)});
  walk.push_back({EdgeKind::s_spoke, rim_index(rim, i + k - 1)});
  return walk_edges(inst, walk);
}

VertexSeq h1_p_plus_q_plus_one(const LabeledInstance& inst) {
  const HView h(inst);
  VertexSeq out{h.b};
  run(out, h.x, 1, h.p());
  out.push_back(h.a);
  run(out, h.y, 1, h.q());
  return out;
}

VertexSeq h2_j_avoidance(const LabeledInstance& inst, int j) {
  const HView h(inst);
  VertexSeq out{h.a};
  run(out, h.z, h.r(), 1);
  out.push_back(h.c);
  run(out, h.y, h.q(), j - 1);
  out.push_back(h.b);
  run(out, h.x, 1, h.p());
  return out;
}

VertexSeq h2_k_avoidance(const LabeledInstance& inst, int k) {
  const HView h(inst);
  VertexSeq out{h.a};
  run(out, h.z, k + 1, 1);
  out.push_back(h.c);
  run(out, h.y, h.q(), 1);
  out.push_back(h.b);
  run(out, h.x, 1, h.p());
  return out;
}

}  // namespace naive

}  // namespace apg
