#include "apg/families.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "apg/connectivity.hpp"
#include "apg/isomorphism.hpp"
#include "apg/planarity.hpp"

namespace apg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_set(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string corner_list(CornerSet c) {
  std::vector<std::string> names;
  if (c.ab) names.emplace_back("ab");
  if (c.bc) names.emplace_back("bc");
  if (c.ac) names.emplace_back("ac");
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

class InstanceBuilder {
 public:
  int add_vertex(VertexRole role) {
    roles_.push_back(role);
    return static_cast<int>(roles_.size()) - 1;
  }
  void add_edge(int u, int v, EdgeRole role) { edges_.emplace_back(make_edge(u, v), role); }

  LabeledInstance build(FamilySpec spec) && {
    LabeledInstance inst;
    inst.spec = std::move(spec);
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [e, role] : edges_) {
      edges.push_back(e);
      inst.edge_roles.emplace(e, role);
    }
    inst.graph = Graph(static_cast<int>(roles_.size()) - 1, edges);
    inst.vertex_roles = std::move(roles_);
    return inst;
  }

 private:
  std::vector<VertexRole> roles_{VertexRole{}};  // slot 0 unused
  std::vector<std::pair<Edge, EdgeRole>> edges_;
};

}  // namespace

int spec_order(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const MobiusSpec& s) { return 2 * s.k; },
                        [](const BicycleSpec& s) { return s.n; },
                        [](const WheelSpec& s) { return s.n; },
                        [](const K33ChainSpec&) { return 6; },
                        [](const HSpec& s) { return s.p + s.q + s.r + 3; },
                    },
                    spec);
}

std::string describe(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const MobiusSpec& s) { return "mobius(k=" + std::to_string(s.k) + ")"; },
          [](const BicycleSpec& s) {
            return "bicycle(n=" + std::to_string(s.n) + ", remove-s=" + join_set(s.removed_s) +
                   ", remove-t=" + join_set(s.removed_t) + ")";
          },
          [](const WheelSpec& s) { return "wheel(n=" + std::to_string(s.n) + ")"; },
          [](const K33ChainSpec& s) { return "k33(extra=" + corner_list(s.extra) + ")"; },
          [](const HSpec& s) {
            return std::string(s.family == HFamily::h1 ? "h1" : "h2") + "(p=" + std::to_string(s.p) +
                   ", q=" + std::to_string(s.q) + ", r=" + std::to_string(s.r) +
                   ", delete=" + corner_list(s.deleted) + ")";
          },
      },
      spec);
}

std::string role_name(const VertexRole& role) {
  const std::string i = std::to_string(role.index);
  switch (role.kind) {
    case VertexKind::ladder_left: return "left" + i;
    case VertexKind::ladder_right: return "right" + i;
    case VertexKind::rim: return "rim" + i;
    case VertexKind::hub_s: return "hub-s";
    case VertexKind::hub_t: return "hub-t";
    case VertexKind::wheel_hub: return "hub";
    case VertexKind::a: return "a";
    case VertexKind::b: return "b";
    case VertexKind::c: return "c";
    case VertexKind::x: return "x" + i;
    case VertexKind::y: return "y" + i;
    case VertexKind::z: return "z" + i;
    case VertexKind::fan: return "fan" + i;
  }
  return "?";
}

std::string role_name(const EdgeRole& role) {
  const std::string i = std::to_string(role.index);
  switch (role.kind) {
    case EdgeKind::ladder_side: return "side" + i;
    case EdgeKind::ladder_rung: return "rung" + i;
    case EdgeKind::ladder_twist: return "twist" + i;
    case EdgeKind::rim: return "r" + i;
    case EdgeKind::s_spoke: return "s" + i;
    case EdgeKind::t_spoke: return "t" + i;
    case EdgeKind::axle: return "z";
    case EdgeKind::wheel_spoke: return "spoke" + i;
    case EdgeKind::k33: return "k33";
    case EdgeKind::ab: return "ab";
    case EdgeKind::bc: return "bc";
    case EdgeKind::ac: return "ac";
    case EdgeKind::fan_path: return "fan-path";
    case EdgeKind::fan_spoke: return "fan-spoke";
  }
  return "?";
}

int LabeledInstance::vertex(VertexKind kind, int index) const {
  for (std::size_t v = 1; v < vertex_roles.size(); ++v)
    if (vertex_roles[v].kind == kind && vertex_roles[v].index == index) return static_cast<int>(v);
  throw InvalidSpec("instance has no vertex " + role_name(VertexRole{kind, index}));
}

const EdgeRole& LabeledInstance::role_of(Edge e) const {
  auto it = edge_roles.find(make_edge(e.u, e.v));
  if (it == edge_roles.end()) throw InvalidSpec("instance has no edge " + to_string(e));
  return it->second;
}

LabeledInstance gen_mobius(int k) {
  if (k < 3) throw InvalidSpec("mobius ladder needs k >= 3");
  InstanceBuilder b;
  for (int i = 1; i <= k; ++i) b.add_vertex({VertexKind::ladder_left, i});
  for (int i = 1; i <= k; ++i) b.add_vertex({VertexKind::ladder_right, i});
  for (int i = 1; i < k; ++i) {
    b.add_edge(i, i + 1, {EdgeKind::ladder_side, i});
    b.add_edge(k + i, k + i + 1, {EdgeKind::ladder_side, k + i});
  }
  for (int i = 1; i <= k; ++i) b.add_edge(i, k + i, {EdgeKind::ladder_rung, i});
  b.add_edge(1, 2 * k, {EdgeKind::ladder_twist, 1});
  b.add_edge(k, k + 1, {EdgeKind::ladder_twist, 2});
  return std::move(b).build(MobiusSpec{k});
}

LabeledInstance gen_bicycle(const BicycleSpec& spec, bool require_3connected) {
  const int n = spec.n;
  if (n < 5) throw InvalidSpec("bicycle wheel needs n >= 5");
  const int rim = n - 2;
  for (const auto* removed : {&spec.removed_s, &spec.removed_t})
    for (int i : *removed)
      if (i < 1 || i > rim) throw InvalidSpec("spoke index " + std::to_string(i) + " outside 1.." + std::to_string(rim));

  std::vector<std::string> warnings;
  for (int i : spec.removed_s) {
    if (spec.removed_t.count(i)) {
      const std::string msg = "spokes s" + std::to_string(i) + " and t" + std::to_string(i) +
                              " both removed: violates 3-connectivity precondition";
      if (require_3connected) throw InvalidSpec(msg);
      warnings.push_back(msg);
    }
  }

  InstanceBuilder b;
  for (int i = 1; i <= rim; ++i) b.add_vertex({VertexKind::rim, i});
  const int hub_t = b.add_vertex({VertexKind::hub_t, 0});
  const int hub_s = b.add_vertex({VertexKind::hub_s, 0});
  for (int i = 1; i <= rim; ++i) b.add_edge(i, i % rim + 1, {EdgeKind::rim, i});
  for (int i = 1; i <= rim; ++i) {
    if (!spec.removed_s.count(i)) b.add_edge(hub_s, i, {EdgeKind::s_spoke, i});
    if (!spec.removed_t.count(i)) b.add_edge(hub_t, i, {EdgeKind::t_spoke, i});
  }
  b.add_edge(hub_t, hub_s, {EdgeKind::axle, 0});
  auto inst = std::move(b).build(spec);
  inst.warnings = std::move(warnings);
  return inst;
}

BicycleSpec a_graph_spec(int n) {
  if (n < 5) throw InvalidSpec("A_n needs n >= 5");
  BicycleSpec spec{n, {}, {}};
  for (int i = 1; i <= n - 2; ++i) {
    if (i % 2 == 0)
      spec.removed_s.insert(i);
    else
      spec.removed_t.insert(i);
  }
  return spec;
}

LabeledInstance gen_a_graph(int n) { return gen_bicycle(a_graph_spec(n)); }

LabeledInstance gen_wheel(int n) {
  if (n < 4) throw InvalidSpec("wheel needs n >= 4");
  InstanceBuilder b;
  const int rim = n - 1;
  for (int i = 1; i <= rim; ++i) b.add_vertex({VertexKind::rim, i});
  const int hub = b.add_vertex({VertexKind::wheel_hub, 0});
  for (int i = 1; i <= rim; ++i) {
    b.add_edge(i, i % rim + 1, {EdgeKind::rim, i});
    b.add_edge(hub, i, {EdgeKind::wheel_spoke, i});
  }
  return std::move(b).build(WheelSpec{n});
}

LabeledInstance gen_k33_chain(CornerSet extra) {
  InstanceBuilder b;
  const int a = b.add_vertex({VertexKind::a, 0});
  const int bb = b.add_vertex({VertexKind::b, 0});
  const int c = b.add_vertex({VertexKind::c, 0});
  const int x1 = b.add_vertex({VertexKind::x, 1});
  const int y1 = b.add_vertex({VertexKind::y, 1});
  const int z1 = b.add_vertex({VertexKind::z, 1});
  for (int corner : {a, bb, c})
    for (int leaf : {x1, y1, z1}) b.add_edge(corner, leaf, {EdgeKind::k33, 0});
  if (extra.ab) b.add_edge(a, bb, {EdgeKind::ab, 0});
  if (extra.bc) b.add_edge(bb, c, {EdgeKind::bc, 0});
  if (extra.ac) b.add_edge(a, c, {EdgeKind::ac, 0});
  return std::move(b).build(K33ChainSpec{extra});
}

LabeledInstance attach_fan(const LabeledInstance& inst, const std::array<Edge, 3>& triangle,
                           const std::pair<Edge, Edge>& sides, int length, VertexKind series) {
  if (length < 1) throw InvalidSpec("fan length must be >= 1");
  const Graph& g = inst.graph;
  std::array<Edge, 3> tri{};
  std::set<int> corners;
  for (std::size_t i = 0; i < 3; ++i) {
    tri[i] = make_edge(triangle[i].u, triangle[i].v);
    if (!g.has_edge(tri[i].u, tri[i].v)) throw InvalidSpec("triangle edge " + to_string(tri[i]) + " not in graph");
    corners.insert(tri[i].u);
    corners.insert(tri[i].v);
  }
  if (corners.size() != 3 || tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
    throw InvalidSpec("edges do not form a triangle");

  const Edge e = make_edge(sides.first.u, sides.first.v);
  const Edge f = make_edge(sides.second.u, sides.second.v);
  auto in_triangle = [&](Edge x) { return std::find(tri.begin(), tri.end(), x) != tri.end(); };
  if (!in_triangle(e) || !in_triangle(f) || e == f)
    throw InvalidSpec("fan sides must be two distinct edges of the triangle sharing a vertex");
  const int hub = (e.u == f.u || e.u == f.v) ? e.u : e.v;
  const int end = e.u == hub ? e.v : e.u;
  const int start = f.u == hub ? f.v : f.u;
  if (length == 1) return inst;

  const Edge dropped = make_edge(start, end);
  LabeledInstance out;
  out.spec = inst.spec;
  out.warnings = inst.warnings;
  out.vertex_roles = inst.vertex_roles;
  out.edge_roles = inst.edge_roles;
  out.edge_roles.erase(dropped);

  std::vector<Edge> edges;
  for (const auto& x : g.edges())
    if (x != dropped) edges.push_back(x);

  int prev = start;
  int next_id = g.order();
  for (int j = 2; j <= length; ++j) {
    const int w = ++next_id;
    out.vertex_roles.push_back({series, j});
    edges.push_back(make_edge(prev, w));
    out.edge_roles[make_edge(prev, w)] = {EdgeKind::fan_path, j - 1};
    edges.push_back(make_edge(hub, w));
    out.edge_roles[make_edge(hub, w)] = {EdgeKind::fan_spoke, j};
    prev = w;
  }
  edges.push_back(make_edge(prev, end));
  out.edge_roles[make_edge(prev, end)] = {EdgeKind::fan_path, length};
  out.graph = Graph(next_id, edges);
  return out;
}

LabeledInstance gen_h(const HSpec& spec) {
  if (spec.p < 1 || spec.q < 1 || spec.r < 1) throw InvalidSpec("H-graph fan lengths must be >= 1");
  LabeledInstance inst = gen_k33_chain(CornerSet::all());
  const int a = inst.vertex(VertexKind::a);
  const int b = inst.vertex(VertexKind::b);
  const int c = inst.vertex(VertexKind::c);
  const int x1 = inst.vertex(VertexKind::x, 1);
  const int y1 = inst.vertex(VertexKind::y, 1);
  const int z1 = inst.vertex(VertexKind::z, 1);

  inst = attach_fan(inst, {make_edge(a, b), make_edge(b, x1), make_edge(a, x1)},
                    {make_edge(a, b), make_edge(b, x1)}, spec.p, VertexKind::x);
  inst = attach_fan(inst, {make_edge(b, c), make_edge(b, y1), make_edge(c, y1)},
                    {make_edge(b, c), make_edge(b, y1)}, spec.q, VertexKind::y);
  if (spec.family == HFamily::h1) {
    inst = attach_fan(inst, {make_edge(a, b), make_edge(b, z1), make_edge(a, z1)},
                      {make_edge(a, b), make_edge(b, z1)}, spec.r, VertexKind::z);
  } else {
    inst = attach_fan(inst, {make_edge(a, b), make_edge(a, z1), make_edge(b, z1)},
                      {make_edge(a, b), make_edge(a, z1)}, spec.r, VertexKind::z);
  }

  std::vector<Edge> drop;
  if (spec.deleted.ab) drop.push_back(make_edge(a, b));
  if (spec.deleted.bc) drop.push_back(make_edge(b, c));
  if (spec.deleted.ac) drop.push_back(make_edge(a, c));
  std::vector<Edge> edges;
  for (const auto& x : inst.graph.edges())
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) edges.push_back(x);
  for (const auto& x : drop) inst.edge_roles.erase(x);
  inst.graph = Graph(inst.graph.order(), edges);
  inst.spec = spec;
  return inst;
}

LabeledInstance generate(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const MobiusSpec& s) { return gen_mobius(s.k); },
                        [](const BicycleSpec& s) { return gen_bicycle(s); },
                        [](const WheelSpec& s) { return gen_wheel(s.n); },
                        [](const K33ChainSpec& s) { return gen_k33_chain(s.extra); },
                        [](const HSpec& s) { return gen_h(s); },
                    },
                    spec);
}

namespace {

// Per rim vertex: 0 = both spokes, 1 = s only, 2 = t only, 3 = neither.
using SpokePattern = std::vector<std::uint8_t>;

SpokePattern canonical(const SpokePattern& p) {
  const std::size_t len = p.size();
  SpokePattern best = p;
  SpokePattern cand(len);
  for (int swap = 0; swap < 2; ++swap) {
    for (int mirror = 0; mirror < 2; ++mirror) {
      for (std::size_t shift = 0; shift < len; ++shift) {
        for (std::size_t i = 0; i < len; ++i) {
          const std::size_t src = mirror ? (shift + len - i) % len : (shift + i) % len;
          std::uint8_t s = p[src];
          if (swap && (s == 1 || s == 2)) s = static_cast<std::uint8_t>(3 - s);
          cand[i] = s;
        }
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

BicycleSpec pattern_spec(int n, const SpokePattern& p) {
  BicycleSpec spec{n, {}, {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    if (p[i] == 2 || p[i] == 3) spec.removed_s.insert(idx);
    if (p[i] == 1 || p[i] == 3) spec.removed_t.insert(idx);
  }
  return spec;
}

}  // namespace

std::vector<BicycleSpec> enumerate_b_minors(int n, bool require_3connected, bool require_nonplanar, int cap) {
  if (n < 5) throw InvalidSpec("bicycle wheel needs n >= 5");
  if (n > cap) throw InvalidSpec("n = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  const std::size_t rim = static_cast<std::size_t>(n - 2);
  // A rim vertex with neither spoke has degree 2, so 3-connected minors
  // only ever use states 0..2.
  const std::uint8_t states = require_3connected ? 3 : 4;

  std::vector<SpokePattern> reps;
  SpokePattern p(rim, 0);
  for (;;) {
    if (canonical(p) == p) reps.push_back(p);
    std::size_t i = 0;
    while (i < rim && ++p[i] == states) p[i++] = 0;
    if (i == rim) break;
  }

  std::vector<char> keep(reps.size(), 0);
  const long count = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto inst = gen_bicycle(pattern_spec(n, reps[static_cast<std::size_t>(i)]), false);
    bool ok = true;
    if (require_3connected) ok = is_k_connected(inst.graph, 3);
    if (ok && require_nonplanar) ok = !is_planar(inst.graph);
    keep[static_cast<std::size_t>(i)] = ok ? 1 : 0;
  }

  std::vector<BicycleSpec> specs;
  std::map<std::vector<int>, std::vector<Graph>> buckets;  // keyed by degree sequence
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!keep[i]) continue;
    auto spec = pattern_spec(n, reps[i]);
    Graph g = gen_bicycle(spec, false).graph;
    auto& bucket = buckets[g.degree_sequence()];
    const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& h) { return are_isomorphic(g, h); });
    if (seen) continue;
    specs.push_back(std::move(spec));
    bucket.push_back(std::move(g));
  }
  std::sort(specs.begin(), specs.end());
  return specs;
}

std::string to_dot(const LabeledInstance& inst) {
  std::ostringstream os;
  os << "graph \"" << describe(inst.spec) << "\" {\n";
  for (int v = 1; v <= inst.graph.order(); ++v) {
    const auto& role = inst.vertex_roles[static_cast<std::size_t>(v)];
    os << "  " << v << " [label=\"" << v << ":" << role_name(role) << "\", role=\"" << role_name(role) << "\"];\n";
  }
  for (const auto& e : inst.graph.edges()) {
    const auto& role = inst.role_of(e);
    os << "  " << e.u << " -- " << e.v << " [label=\"" << role_name(role) << "\", role=\"" << role_name(role)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace apg
