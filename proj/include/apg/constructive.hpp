#pragma once

#include <vector>

#include "apg/families.hpp"
#include "apg/oracle.hpp"

namespace apg {

/// Requested cycle length is not achievable in the family, or the builder
/// does not apply to the given instance.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Every builder validates its own output with validate_cycle/validate_path
// before returning and throws ConstructionError rather than emit a bad
// sequence. All of them run in O(n) per cycle.

/// Rim index i taken modulo r and mapped into 1..r.
inline int rim_index(int r, int i) { return ((i - 1) % r + r) % r + 1; }

/// Even lengths 4..2k via ladder runs; for even k also the odd lengths
/// k+1..2k-1, each built from the twist path by adding rung crossings.
VertexSeq mobius_cycle(const LabeledInstance& inst, int length);

/// Full B_n only: hub n, rim 1..length-2, hub n-1.
VertexSeq bicycle_cycle(const LabeledInstance& inst, int length);

/// Full B_n only: spanning path from u to v for any pair u != v.
VertexSeq bicycle_ham_path(const LabeledInstance& inst, int u, int v);

/// Any B-graph: finds consecutive rim vertices attached to different hubs
/// and closes the rim through the axle.
VertexSeq b_graph_ham_cycle(const LabeledInstance& inst);

/// Alternating-spoke instance with n even (A_n): even lengths 4..n.
VertexSeq a_even_cycle(const LabeledInstance& inst, int length);

/// B-graph with two same-hub spokes on adjacent rim vertices: every length 3..n.
VertexSeq b_adjacent_spoke_cycle(const LabeledInstance& inst, int length);

/// Hub plus length-1 consecutive rim vertices.
VertexSeq wheel_cycle(const LabeledInstance& inst, int length);

/// H1 / H2 instances (meant for the variant with ab, bc, ac all deleted;
/// cycles found there remain cycles when corner edges are present).
VertexSeq h1_cycle(const LabeledInstance& inst, int length);
VertexSeq h2_cycle(const LabeledInstance& inst, int length);

/// K3,3 plus whatever corner edges the instance graph carries.
VertexSeq k33_chain_cycle(const LabeledInstance& inst, int length);

/// Predicted spectrum with one validated witness per length. Throws
/// ConstructionError for specs without a full prediction.
CycleSpectrum constructive_spectrum(const FamilySpec& spec);

/// Literal transcriptions of construction formulas whose printed indices are
/// off. They are not validated; the test suite keeps them to show each one
/// fails and that the corrected builder above succeeds.
namespace naive {

/// "1, 2, ..., t/2, k+t/2, ..., k+1" offered as a 2t-cycle (t even).
VertexSeq mobius_even_cycle(int k, int t);
/// "1, 2, ..., k-1, 2k, k, 2k-1, ..., k+1".
VertexSeq mobius_hamiltonian(int k);
/// "1, 2, ..., k-1, 2k, k" offered as a (k+1)-cycle.
VertexSeq mobius_k_plus_one(int k);
/// "i, i+1, ..., j-1, n, n-1, n-2, ..., j-1, j" for non-adjacent rim i < j.
VertexSeq bicycle_nonadjacent_path(int n, int i, int j);
/// Edge walk "s1 r1 t2 t(n-2) r(n-2) ... r3 s3" on A_n, n even.
VertexSeq a_graph_hamiltonian(const LabeledInstance& inst);
/// Edge walk "s(i) r(i) ... r(i+k-2) s(i+k-1)" offered as a k-cycle.
VertexSeq b_adjacent_spoke_cycle(const LabeledInstance& inst, int i, int k);
/// "b, x1, ..., xp, a, y1, ..., yq" offered as a (p+q+1)-cycle in H1.
VertexSeq h1_p_plus_q_plus_one(const LabeledInstance& inst);
/// "a, zr, ..., z1, c, yq, ..., y(j-1), b, x1, ..., xp" offered as an (n-j)-cycle in H2.
VertexSeq h2_j_avoidance(const LabeledInstance& inst, int j);
/// "a, z(k+1), ..., z1, c, yq, ..., y1, b, x1, ..., xp" offered as an (n-k)-cycle in H2.
VertexSeq h2_k_avoidance(const LabeledInstance& inst, int k);

}  // namespace naive

/// Vertex sequence traced by a list of labelled edges. The start is the end
/// of the first edge not shared with the second. An edge that does not touch
/// the current vertex contributes both of its endpoints, so a broken walk
/// shows up as a validation failure.
VertexSeq walk_edges(const LabeledInstance& inst, const std::vector<EdgeRole>& walk);

}  // namespace apg
