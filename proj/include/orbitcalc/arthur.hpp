#pragma once

#include <string>
#include <vector>

#include "orbitcalc/classical.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// One summand of a local Arthur parameter at the partition level: the
/// second SL2 acts through S_b and the remaining data has dimension a.
struct ArthurFactor {
  int a = 0;
  int b = 0;

  friend bool operator==(const ArthurFactor&, const ArthurFactor&) = default;
};

/// Partition shadow {(a_i, b_i)} of a local Arthur parameter of `group`,
/// p(psi) = [b_1^{a_1} ... b_r^{a_r}].
///
/// `group` is the group G_n whose packet is parameterised: C(n) = Sp(2n)
/// with p(psi) an orthogonal partition of 2n+1, B(n) = SO(2n+1) with p(psi)
/// a symplectic partition of 2n, D(n) = SO(2n) with p(psi) an orthogonal
/// partition of 2n. Factors with equal b are merged and sorted by
/// decreasing b.
class ArthurPartitionData {
 public:
  /// Throws kInvalidParameter on non-positive entries, a size mismatch or
  /// the wrong parity type.
  static ArthurPartitionData validate(const GroupType& group,
                                      std::vector<ArthurFactor> factors);
  static ArthurPartitionData from_partition(const GroupType& group,
                                            const Partition& p);

  const GroupType& group() const noexcept { return group_; }
  const std::vector<ArthurFactor>& factors() const noexcept { return factors_; }
  const Partition& p_psi() const noexcept { return p_psi_; }

  friend bool operator==(const ArthurPartitionData&,
                         const ArthurPartitionData&) = default;

 private:
  ArthurPartitionData(GroupType g, std::vector<ArthurFactor> f, Partition p)
      : group_(g), factors_(std::move(f)), p_psi_(std::move(p)) {}

  GroupType group_;
  std::vector<ArthurFactor> factors_;
  Partition p_psi_;
};

/// Size of p(psi) for parameters of `group`: 2n+1 for C, 2n for B and D.
int parameter_size(const GroupType& group);

/// "C6:{3^3,2^2}"
std::string to_string(const ArthurPartitionData& psi);

const Partition& p_psi(const ArthurPartitionData& psi);
/// Wavefront partition of the GL(N) representation attached to psi: p(psi)^t.
Partition gl_wavefront(const ArthurPartitionData& psi);

bool is_tempered(const ArthurPartitionData& psi);

/// Odd-b part psi1 on G1' and even-b part psi2 on G2':
///   Sp(2n)   -> Sp(2n1) x SO(2n2)
///   SO(2n+1) -> SO(2n1+1) x SO(2n2+1)
///   SO(2n)   -> SO(2n1) x SO(2n2)
struct EndoscopicSplit {
  ArthurPartitionData psi1;
  ArthurPartitionData psi2;
  int n1 = 0;
  int n2 = 0;
};

EndoscopicSplit split_IJ(const ArthurPartitionData& psi);

/// Upper bound for the wavefront of the twisted GL representation:
/// collapse_{dual}(p^t) for B and D, collapse_C((p^t)^-) for C.
Partition bitorsor_bound(const ArthurPartitionData& psi);

struct P1NStar {
  /// [floor(b_1/2)^{a_1} ... floor(b_r/2)^{a_r}]^t
  Partition p1;
  /// floor(sum of a_i over odd b_i / 2)
  int n_star = 0;
};

P1NStar p1_and_nstar(const ArthurPartitionData& psi);

/// [p1 p1 (2n*)] for C, [p1 p1 (2n*+1)] for B, [p1 p1 (2n*-1) 1] for D.
/// Non-positive extra parts are dropped; for D with n* = 0 both extra
/// parts are omitted.
Partition constructed_union(const ArthurPartitionData& psi);

/// Expansion of constructed_union(psi) in the group.
Partition constructed_member_partition(const ArthurPartitionData& psi);

enum class SufficientClass { kCi, kCii, kBi, kBii, kDSameParity, kNone };

std::string to_string(SufficientClass c);

SufficientClass sufficient_condition_class(const ArthurPartitionData& psi);

struct CriterionResult {
  Partition lhs;
  Partition rhs;
  bool verdict = false;
  SufficientClass tag = SufficientClass::kNone;
};

/// Collapse-form criterion:
///   C: collapse_C(U^t)          vs collapse_C(p(psi)^-)
///   B: collapse_B(U^t)          vs collapse_B(p(psi)^+)
///   D: expansion_D(U)           vs collapse_D(p(psi)^t)
CriterionResult check_criterion(const ArthurPartitionData& psi);

/// Expansion form: expansion(U) vs eta(p(psi)).
CriterionResult check_expansion_form(const ArthurPartitionData& psi);

struct DominanceCheck {
  Partition constructed;
  Partition eta;
  /// constructed <= eta in dominance
  bool holds = false;
  bool strict = false;
  /// False for family D, where the inequality is reported but not claimed.
  bool asserted = true;
};

/// expansion(U) <= eta(p(psi)).
DominanceCheck check_prop58(const ArthurPartitionData& psi);

/// Every parameter of `group`, one per type partition of parameter_size,
/// in the lexicographically decreasing order of p(psi).
std::vector<ArthurPartitionData> enumerate_parameters(const GroupType& group);

}  // namespace orbitcalc
