#pragma once

#include <json.hpp>

#include "apg/classify.hpp"
#include "apg/families.hpp"
#include "apg/oracle.hpp"
#include "apg/planarity.hpp"

namespace apg {

using nlohmann::json;

/// Every top-level document carries this in its "schema" field.
inline constexpr int kJsonSchema = 1;

json to_json(const FamilySpec& spec);
/// Throws InvalidSpec on unknown families, missing fields or bad values.
FamilySpec spec_from_json(const json& j);

json to_json(const AlmostPlanarEvidence& ev);
json to_json(const CycleSpectrum& s, bool witnesses);
json to_json(const Classification& c);

/// Spec, vertex roles and edge roles of a generated instance.
json roles_to_json(const LabeledInstance& inst);

}  // namespace apg
