#pragma once

#include <string>
#include <vector>

#include "orbitcalc/arthur.hpp"
#include "orbitcalc/classical.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Complex dimension of the orbit with partition p in the Lie algebra of X.
/// Throws kTypeMismatch unless p is of type X.
long long dim_orbit(const Partition& p, const GroupType& group);

/// 2n^2+n for B and C, 2n^2-n for D.
long long dim_group(const GroupType& group);

/// One named contribution to a side of an identity, kept for reports.
struct DimTerm {
  std::string label;
  GroupType group;
  Partition partition;
  long long group_dim = 0;
  long long orbit_dim = 0;
};

struct VerificationItem {
  long long lhs = 0;
  long long rhs = 0;
  /// verify_lemma41 only: right side with every factor measured on its dual
  /// group, dim(g_k^) - dim((p(psi^k)^t) collapsed on G_k^). Equal to rhs
  /// outside family C.
  long long rhs_dual = 0;
  bool holds = false;
  std::vector<DimTerm> terms;
};

/// codim of eta(p(psi)) in g_n against the endoscopic sum. For C the first
/// factor is measured in sp(2n1) through eta(p(psi1)).
VerificationItem verify_lemma41(const ArthurPartitionData& psi);

/// dim in eta_target(source) of eta(p) against dim in source of
/// collapse(p^t, source).
VerificationItem verify_prop42(const Partition& p, const GroupType& source);

}  // namespace orbitcalc
