#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitcalc/classical.hpp"

namespace orbitcalc {

struct PosetNode {
  Partition partition;
  std::optional<VeryEvenLabel> label;
  long long dim = 0;
  bool special = false;
  /// eta image on the dual group, filled when requested.
  std::optional<Partition> eta;
};

/// Dominance order on the type-X partitions of N(X). Very even type-D
/// partitions appear twice (labels I and II) with no edge between the copies.
struct ClosurePoset {
  GroupType group;
  std::vector<PosetNode> nodes;
  /// Covering pairs (lower, upper) as node indices.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

ClosurePoset build_closure_poset(const GroupType& group, bool with_eta = false);

std::string to_dot(const ClosurePoset& poset);
nlohmann::json to_json(const ClosurePoset& poset);

std::string node_name(const PosetNode& node);

}  // namespace orbitcalc
