#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apg/families.hpp"

namespace apg {

/// Deliberate corruption used to check that the suite notices a broken
/// generator. Never enabled outside tests.
enum class Fault {
  none,
  mobius_chord,   // extra chord 1-3 in every Mobius ladder
  bicycle_spoke,  // drop spoke s1 from every full bicycle wheel
};

Fault parse_fault(const std::string& name);

struct VerifyConfig {
  int max_n = 14;  // criteria with a smaller built-in range keep their own bound
  Fault fault = Fault::none;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  std::optional<std::string> counterexample;  // edge list of the first failing graph
};

inline constexpr int kCriterionCount = 10;

/// Criterion ids run by a suite: mobius, bicycle, h, theorems, all.
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int id, const VerifyConfig& config = {});

/// Every Mobius, B-graph, K3,3-chain and H spec with at most max_n vertices
/// whose graph is 3-connected and non-planar. max_n is clamped to the
/// enumeration cap.
std::vector<FamilySpec> admissible_specs(int max_n);

}  // namespace apg
