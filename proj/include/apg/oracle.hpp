#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

/// Input larger than the brute-force search is allowed to handle.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr int kDefaultOracleCap = 18;
/// Bitmask kernels store vertex sets in 64 bits.
inline constexpr int kHardOracleCap = 63;

/// APK_ORACLE_CAP when set to a valid integer, otherwise kDefaultOracleCap.
int oracle_cap_from_env();

struct CycleSpectrum {
  int n = 0;
  std::set<int> lengths;                // subset of 3..n
  std::map<int, VertexSeq> witnesses;   // optional, one cycle per length

  bool is_full() const;
  friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;
};

/// Exhaustive per-length depth-first cycle search. Lengths run in an OpenMP
/// parallel loop; each length short-circuits on its first cycle.
CycleSpectrum cycle_spectrum(const Graph& g, bool witnesses = false, int cap = oracle_cap_from_env());

/// Serial reference kernel; identical output, including witnesses.
CycleSpectrum cycle_spectrum_serial(const Graph& g, bool witnesses = false, int cap = oracle_cap_from_env());

/// A simple cycle on exactly `length` vertices, or nullopt.
std::optional<VertexSeq> find_cycle(const Graph& g, int length, int cap = oracle_cap_from_env());

bool is_pancyclic(const Graph& g, int cap = oracle_cap_from_env());

std::optional<VertexSeq> hamiltonian_cycle(const Graph& g, int cap = oracle_cap_from_env());
inline bool is_hamiltonian(const Graph& g, int cap = oracle_cap_from_env()) {
  return hamiltonian_cycle(g, cap).has_value();
}

/// Spanning path from u to v, or nullopt.
std::optional<VertexSeq> hamiltonian_path(const Graph& g, int u, int v, int cap = oracle_cap_from_env());

struct HamConnectivity {
  bool connected = false;
  std::optional<std::pair<int, int>> failing_pair;  // lexicographically first
};

/// All unordered pairs searched in an OpenMP parallel loop.
HamConnectivity is_hamiltonian_connected(const Graph& g, int cap = oracle_cap_from_env());
HamConnectivity is_hamiltonian_connected_serial(const Graph& g, int cap = oracle_cap_from_env());

enum class CycleFault {
  none,
  too_short,         // fewer than 3 vertices
  wrong_length,
  vertex_out_of_range,
  duplicate_vertex,
  missing_edge,
};

std::string to_string(CycleFault f);

struct CycleCheck {
  bool ok = false;
  CycleFault fault = CycleFault::none;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Distinct vertices, count == expect_length, consecutive pairs and the
/// closing pair all edges of g. O(length * log(max degree)).
CycleCheck validate_cycle(const Graph& g, const VertexSeq& c, int expect_length);

/// Same for an open path (no closing edge).
CycleCheck validate_path(const Graph& g, const VertexSeq& p, int expect_length);

}  // namespace apg
