#pragma once

#include <optional>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

/// Exact planarity test (Boyer-Myrvold edge addition).
bool is_planar(const Graph& g);

struct EdgeEvidence {
  Edge edge;
  bool deletion_planar = false;
  bool contraction_planar = false;
};

/// Outcome of the almost-planarity check: g is non-planar and every edge has
/// a planar deletion or a planar contraction.
struct AlmostPlanarEvidence {
  bool verdict = false;
  bool planar = false;
  std::vector<EdgeEvidence> per_edge;  // canonical (sorted) edge order
  std::optional<Edge> failing_edge;    // first edge with both checks false
};

/// Per-edge checks run in an OpenMP parallel loop.
AlmostPlanarEvidence is_almost_planar(const Graph& g);

/// Serial reference kernel; output is identical to is_almost_planar.
AlmostPlanarEvidence is_almost_planar_serial(const Graph& g);

}  // namespace apg
