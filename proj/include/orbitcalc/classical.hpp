#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Classical Lie algebra families: B(n) = so(2n+1), C(n) = sp(2n),
/// D(n) = so(2n).
enum class Family { B, C, D };

char family_letter(Family f);

struct GroupType {
  Family family = Family::C;
  int rank = 0;

  /// Size of the partitions labelling nilpotent orbits: 2n+1 for B, 2n
  /// for C and D.
  int partition_size() const;
  /// Langlands dual family at the same rank: B <-> C, D <-> D.
  GroupType dual() const;
  /// "C5"
  std::string name() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

GroupType make_group(Family family, int rank);

/// Every even part occurs with even multiplicity.
bool is_orthogonal(const Partition& p);
/// Every odd part occurs with even multiplicity.
bool is_symplectic(const Partition& p);
/// Parity condition of the family only (orthogonal for B and D,
/// symplectic for C); no size check.
bool has_family_parity(const Partition& p, Family family);
/// Size matches the group and the family parity condition holds.
bool is_type(const Partition& p, const GroupType& group);

/// Labels the two orbits sharing a very even partition in type D.
enum class VeryEvenLabel { I, II };

/// Type-D partition with all parts even (and nonempty).
bool is_very_even(const Partition& p, const GroupType& group);

/// A nilpotent orbit at the partition level.
struct OrbitPartition {
  Partition partition;
  GroupType group;
  std::optional<VeryEvenLabel> label;

  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

/// Validates type membership and that the label is present exactly for very
/// even type-D partitions.
OrbitPartition make_orbit(Partition p, const GroupType& group,
                          std::optional<VeryEvenLabel> label = std::nullopt);

/// Largest type-`group` partition dominated by p, via the box-moving
/// recipe: repeatedly take the largest part of the wrong parity with odd
/// multiplicity, lower its last occurrence by one and raise the first later
/// part that is at least two smaller.
Partition collapse(const Partition& p, const GroupType& group);

/// Smallest special type-`group` partition dominating p. Throws
/// kNoExtremum when nothing dominates p (possible only in type D) and
/// kAmbiguousExtremum when the candidates have no unique minimum.
Partition expansion(const Partition& p, const GroupType& group);

/// d(p) = collapse(p^t). Requires p of the group's type.
Partition spaltenstein_dual(const Partition& p, const GroupType& group);

/// Fixed point of d∘d. Requires p of the group's type.
bool is_special(const Partition& p, const GroupType& group);

/// All type-`group` partitions of N(group), lexicographically decreasing.
std::vector<Partition> enumerate_type_partitions(const GroupType& group);

/// Brute-force collapse: dominance maximum of the enumerated type
/// partitions below p. Throws kAmbiguousExtremum on a tie.
Partition collapse_oracle(const Partition& p, const GroupType& group);

/// Brute-force expansion: dominance minimum of the enumerated special type
/// partitions above p. Same error contract as expansion().
Partition expansion_oracle(const Partition& p, const GroupType& group);

}  // namespace orbitcalc
