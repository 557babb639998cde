#pragma once

#include <json.hpp>

#include "orbitcalc/arthur.hpp"
#include "orbitcalc/classical.hpp"
#include "orbitcalc/dimensions.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

// Partitions are plain integer arrays in decreasing order; groups are
// {"family": "C", "rank": 5}.
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);
void to_json(nlohmann::json& j, const GroupType& g);
void from_json(const nlohmann::json& j, GroupType& g);

/// {"group": {...}, "p_psi": [...], "factors": [{"a":..,"b":..}], "text": ..}
nlohmann::json parameter_json(const ArthurPartitionData& psi);
/// Reads {"group": ..., "p_psi": [...]}; other keys are ignored.
ArthurPartitionData parameter_from_json(const nlohmann::json& j);

nlohmann::json criterion_json(const CriterionResult& r);
nlohmann::json dominance_json(const DominanceCheck& d);
nlohmann::json item_json(const VerificationItem& item);

}  // namespace orbitcalc
