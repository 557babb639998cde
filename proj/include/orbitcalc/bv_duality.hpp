#pragma once

#include "orbitcalc/classical.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Group whose orbits receive the duality image of partitions living on
/// `source`: B(n) -> C(n), C(n) -> B(n), D(n) -> D(n).
GroupType eta_target(const GroupType& source);

/// Group on which a partition of size N for `family` naturally lives
/// (rank derived from the size). Throws kSizeMismatch on a parity clash.
GroupType group_for_size(Family family, int size);

/// Barbasch-Vogan duality from partitions of `source` (the dual-group side)
/// to partitions of eta_target(source):
///   source B: (collapse_C(p^-))^t
///   source C: (collapse_B(p^+))^t
///   source D: collapse_D(p^t)
/// Throws kTypeMismatch when p is not a `source` partition.
Partition eta(const Partition& p, const GroupType& source);

/// The same map through the transpose-first formulas:
///   source B: collapse_C((p^t)^-)
///   source C: collapse_B((p^t)^+)
///   source D: collapse_D(p^t) (the only formula for this case)
Partition eta_alt(const Partition& p, const GroupType& source);

/// collapse_D(p^t) == (collapse_C(p^{+-}))^t for a partition of 2n that is
/// orthogonal or has symplectic transpose. Throws kTypeMismatch otherwise.
bool achar_identity_check(const Partition& p);

}  // namespace orbitcalc
