#pragma once

#include <string>
#include <string_view>

#include "orbitcalc/arthur.hpp"
#include "orbitcalc/classical.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// "[3,3,2,2,2]", "[3^2 2^3]", "[3 3 2^3]", "[]". Commas and whitespace both
/// separate; parts must already be weakly decreasing. Throws kParse naming
/// the offending token.
Partition parse_partition(std::string_view text);

/// "C5", "b2", "D4".
GroupType parse_group(std::string_view text);

/// "C6:{3^3,2^2}" or "C6:[3,3,3,2,2]". Entries b^a in any order; equal b
/// are merged.
ArthurPartitionData parse_parameter(std::string_view text);

/// Family of the dual side that eta reads from. Accepts the family letters
/// and the names soOdd (B), sp (C) and soEven (D).
Family parse_source_family(std::string_view text);

}  // namespace orbitcalc
