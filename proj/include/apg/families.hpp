#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

/// Spec outside a family's parameter range, or a malformed construction request.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Subset of the three edges ab, bc, ac joining the corners a, b, c of K3,3.
struct CornerSet {
  bool ab = false;
  bool bc = false;
  bool ac = false;

  static CornerSet none() { return {}; }
  static CornerSet all() { return {true, true, true}; }
  static CornerSet from_mask(int mask) { return {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}; }
  int mask() const { return (ab ? 1 : 0) | (bc ? 2 : 0) | (ac ? 4 : 0); }
  int count() const { return (ab ? 1 : 0) + (bc ? 1 : 0) + (ac ? 1 : 0); }
  CornerSet complement() const { return {!ab, !bc, !ac}; }

  friend auto operator<=>(const CornerSet&, const CornerSet&) = default;
};

/// Möbius ladder on 2k vertices.
struct MobiusSpec {
  int k = 3;
  friend auto operator<=>(const MobiusSpec&, const MobiusSpec&) = default;
};

/// Bicycle wheel B_n with some spokes removed. Spoke indices are rim vertices 1..n-2.
struct BicycleSpec {
  int n = 5;
  std::set<int> removed_s;
  std::set<int> removed_t;
  friend auto operator<=>(const BicycleSpec&, const BicycleSpec&) = default;
};

/// Wheel with n vertices: hub n and rim cycle 1..n-1.
struct WheelSpec {
  int n = 4;
  friend auto operator<=>(const WheelSpec&, const WheelSpec&) = default;
};

/// K3,3 plus the chosen corner edges (none: K3,3, all three: K3,3''').
struct K33ChainSpec {
  CornerSet extra;
  friend auto operator<=>(const K33ChainSpec&, const K33ChainSpec&) = default;
};

enum class HFamily { h1 = 1, h2 = 2 };

/// K3,3''' with fans of length p, q, r attached, then `deleted` corner edges removed.
struct HSpec {
  HFamily family = HFamily::h1;
  int p = 1;
  int q = 1;
  int r = 1;
  CornerSet deleted;
  friend auto operator<=>(const HSpec&, const HSpec&) = default;
};

using FamilySpec = std::variant<MobiusSpec, BicycleSpec, WheelSpec, K33ChainSpec, HSpec>;

/// Vertex count of the graph a spec generates.
int spec_order(const FamilySpec& spec);
std::string describe(const FamilySpec& spec);

enum class VertexKind {
  ladder_left,
  ladder_right,
  rim,
  hub_s,
  hub_t,
  wheel_hub,
  a,
  b,
  c,
  x,
  y,
  z,
  fan,
};

enum class EdgeKind {
  ladder_side,
  ladder_rung,
  ladder_twist,
  rim,
  s_spoke,
  t_spoke,
  axle,
  wheel_spoke,
  k33,
  ab,
  bc,
  ac,
  fan_path,
  fan_spoke,
};

struct VertexRole {
  VertexKind kind = VertexKind::rim;
  int index = 0;
  friend auto operator<=>(const VertexRole&, const VertexRole&) = default;
};

struct EdgeRole {
  EdgeKind kind = EdgeKind::rim;
  int index = 0;
  friend auto operator<=>(const EdgeRole&, const EdgeRole&) = default;
};

std::string role_name(const VertexRole& role);
std::string role_name(const EdgeRole& role);

/// A generated graph with every vertex and edge tied to its structural role.
struct LabeledInstance {
  FamilySpec spec;
  Graph graph;
  std::vector<VertexRole> vertex_roles;  // indexed by vertex, entry 0 unused
  std::map<Edge, EdgeRole> edge_roles;
  std::vector<std::string> warnings;

  /// Vertex carrying the given role; throws InvalidSpec if absent.
  int vertex(VertexKind kind, int index = 0) const;
  const EdgeRole& role_of(Edge e) const;
};

LabeledInstance gen_mobius(int k);

/// Rim 1..n-2 with r_i = i-(i+1) (indices mod n-2), s-hub n, t-hub n-1,
/// s_i = n-i, t_i = (n-1)-i, axle z = (n-1)-n. If some rim vertex loses both
/// spokes, throws when require_3connected is set and otherwise records a warning.
LabeledInstance gen_bicycle(const BicycleSpec& spec, bool require_3connected = true);

/// Alternating spokes: s-spokes at odd rim indices, t-spokes at even ones.
BicycleSpec a_graph_spec(int n);
LabeledInstance gen_a_graph(int n);

LabeledInstance gen_wheel(int n);
LabeledInstance gen_k33_chain(CornerSet extra);
LabeledInstance gen_h(const HSpec& spec);

inline LabeledInstance gen_h1(int p, int q, int r, CornerSet deleted = {}) {
  return gen_h(HSpec{HFamily::h1, p, q, r, deleted});
}
inline LabeledInstance gen_h2(int p, int q, int r, CornerSet deleted = {}) {
  return gen_h(HSpec{HFamily::h2, p, q, r, deleted});
}

/// Type-1 fan: glue a wheel onto the triangle so that `sides` become two of
/// its spokes, then drop the third triangle edge. The new rim path runs from
/// the far end of sides.second through length - 1 new vertices to the far end
/// of sides.first; each new vertex is joined to the shared corner. New
/// vertices take `series` roles numbered 2..length. Length 1 is the identity.
LabeledInstance attach_fan(const LabeledInstance& inst, const std::array<Edge, 3>& triangle,
                           const std::pair<Edge, Edge>& sides, int length, VertexKind series = VertexKind::fan);

LabeledInstance generate(const FamilySpec& spec);

inline constexpr int kDefaultEnumerationCap = 12;

/// Spoke-deleted minors of B_n, one per isomorphism class. Candidates are
/// first reduced modulo rim rotation/reflection and hub swap; the filters are
/// then evaluated on each candidate and the survivors are deduplicated again
/// with an exact isomorphism test. Output is sorted.
std::vector<BicycleSpec> enumerate_b_minors(int n, bool require_3connected, bool require_nonplanar,
                                            int cap = kDefaultEnumerationCap);

/// Graphviz rendering with role names as labels.
std::string to_dot(const LabeledInstance& inst);

}  // namespace apg
