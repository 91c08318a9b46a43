#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apg/families.hpp"
#include "apg/isomorphism.hpp"
#include "apg/planarity.hpp"

namespace apg {

/// Constructive output requested for a graph no family covers.
class Unclassifiable : public Error {
 public:
  using Error::Error;
};

/// A computation contradicted the family characterization or a predicted
/// property. Never swallowed.
class FalsificationError : public Error {
 public:
  using Error::Error;
};

enum class Gate { planar, not_3_connected, not_almost_planar, almost_planar };

std::string to_string(Gate g);

struct SpectrumPrediction {
  std::set<int> lengths;
  bool exact = false;  // false: partial, no claim about the lengths
  std::string note;
};

/// Family-level spectrum for a spec without running any cycle search.
SpectrumPrediction predict_spectrum(const FamilySpec& spec);

struct PredictedProperties {
  bool pancyclic = false;
  bool hamiltonian = false;
  std::optional<bool> hamiltonian_connected;  // only set for 4-connected graphs
  std::optional<std::set<int>> spectrum;
};

struct Classification {
  Gate gate = Gate::planar;
  std::optional<FamilySpec> matched_spec;
  std::optional<VertexMap> iso_map;  // input vertex -> generated vertex
  std::optional<PredictedProperties> predicted;
  std::vector<FamilySpec> all_matches;
  std::optional<AlmostPlanarEvidence> evidence;
  std::vector<std::string> notes;
};

/// Gates: planar, then 3-connectivity, then almost-planarity; an
/// almost-planar graph is then matched against every family candidate of
/// its order. Throws OracleCapExceeded above `cap` vertices and
/// FalsificationError when an almost-planar graph matches nothing.
Classification classify(const Graph& g, int cap = kDefaultEnumerationCap);

/// Candidate specs of order n in priority order: Mobius, Bicycle, K3,3 chain, H1, H2.
std::vector<FamilySpec> candidate_specs(int n, int cap = kDefaultEnumerationCap);

bool has_triangle(const Graph& g);

}  // namespace apg
