#include "orbitcalc/arthur.hpp"

#include <algorithm>
#include <map>

#include "orbitcalc/bv_duality.hpp"

namespace orbitcalc {

namespace {

Partition partition_of(const std::vector<ArthurFactor>& factors) {
  std::vector<PartPower> powers;
  powers.reserve(factors.size());
  for (const auto& f : factors) powers.push_back({f.b, f.a});
  return Partition::from_powers(powers);
}

std::vector<ArthurFactor> factors_of(const Partition& p) {
  std::vector<ArthurFactor> out;
  for (const auto& pw : p.powers()) out.push_back({pw.multiplicity, pw.part});
  return out;
}

// Parameters of a subgroup built from a sub-multiset of factors. The
// subgroup rank follows from the size of the sub-partition.
ArthurPartitionData sub_parameter(Family family,
                                  std::vector<ArthurFactor> factors) {
  const int size = partition_of(factors).size();
  int rank = 0;
  if (family == Family::C) {
    if (size % 2 != 1) {
      throw Error(ErrorCode::kInternal,
                  "odd-b part of an Sp parameter must have odd size");
    }
    rank = (size - 1) / 2;
  } else {
    if (size % 2 != 0) {
      throw Error(ErrorCode::kInternal,
                  "sub-parameter of even size expected");
    }
    rank = size / 2;
  }
  return ArthurPartitionData::validate(make_group(family, rank),
                                       std::move(factors));
}

}  // namespace

int parameter_size(const GroupType& group) {
  return group.family == Family::C ? 2 * group.rank + 1 : 2 * group.rank;
}

ArthurPartitionData ArthurPartitionData::validate(
    const GroupType& group, std::vector<ArthurFactor> factors) {
  for (const auto& f : factors) {
    if (f.a <= 0 || f.b <= 0) {
      throw Error(ErrorCode::kInvalidParameter,
                  "factor (" + std::to_string(f.a) + ", " + std::to_string(f.b) +
                      ") must have positive entries");
    }
  }
  std::map<int, int, std::greater<>> merged;
  for (const auto& f : factors) {
    merged[f.b] = detail::checked_add(merged[f.b], f.a);
  }
  std::vector<ArthurFactor> canon;
  for (const auto& [b, a] : merged) canon.push_back({a, b});
  Partition p = partition_of(canon);
  if (p.size() != parameter_size(group)) {
    throw Error(ErrorCode::kInvalidParameter,
                "parameter for " + group.name() + " needs p(psi) of size " +
                    std::to_string(parameter_size(group)) + ", got " +
                    to_string(p) + " of size " + std::to_string(p.size()));
  }
  const GroupType dual = group.dual();
  if (!has_family_parity(p, dual.family)) {
    throw Error(ErrorCode::kInvalidParameter,
                "parameter for " + group.name() + " needs an " +
                    (dual.family == Family::C ? "symplectic" : "orthogonal") +
                    " p(psi), got " + to_string(p));
  }
  return ArthurPartitionData(group, std::move(canon), std::move(p));
}

ArthurPartitionData ArthurPartitionData::from_partition(const GroupType& group,
                                                        const Partition& p) {
  return validate(group, factors_of(p));
}

std::string to_string(const ArthurPartitionData& psi) {
  std::string s = psi.group().name() + ":{";
  bool first = true;
  for (const auto& f : psi.factors()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(f.b) + '^' + std::to_string(f.a);
  }
  return s + '}';
}

const Partition& p_psi(const ArthurPartitionData& psi) { return psi.p_psi(); }

Partition gl_wavefront(const ArthurPartitionData& psi) {
  return transpose(psi.p_psi());
}

bool is_tempered(const ArthurPartitionData& psi) {
  return std::all_of(psi.factors().begin(), psi.factors().end(),
                     [](const ArthurFactor& f) { return f.b == 1; });
}

EndoscopicSplit split_IJ(const ArthurPartitionData& psi) {
  std::vector<ArthurFactor> odd;
  std::vector<ArthurFactor> even;
  for (const auto& f : psi.factors()) (f.b % 2 ? odd : even).push_back(f);
  const Family family = psi.group().family;
  if (family == Family::C && odd.empty()) {
    throw Error(ErrorCode::kInternal,
                "Sp parameter with no odd b: " + to_string(psi));
  }
  const Family first = family;
  const Family second = family == Family::C ? Family::D : family;
  auto psi1 = sub_parameter(first, std::move(odd));
  auto psi2 = sub_parameter(second, std::move(even));
  const int n1 = psi1.group().rank;
  const int n2 = psi2.group().rank;
  if (n1 + n2 != psi.group().rank) {
    throw Error(ErrorCode::kInternal, "endoscopic ranks do not add up for " +
                                          to_string(psi));
  }
  return {std::move(psi1), std::move(psi2), n1, n2};
}

Partition bitorsor_bound(const ArthurPartitionData& psi) {
  const Partition t = transpose(psi.p_psi());
  if (psi.group().family == Family::C) {
    return collapse(dec_min(t), psi.group());
  }
  return collapse(t, psi.group().dual());
}

P1NStar p1_and_nstar(const ArthurPartitionData& psi) {
  std::vector<PartPower> halves;
  int odd_a = 0;
  for (const auto& f : psi.factors()) {
    if (f.b / 2 > 0) halves.push_back({f.b / 2, f.a});
    if (f.b % 2 == 1) odd_a = detail::checked_add(odd_a, f.a);
  }
  return {transpose(Partition::from_powers(halves)), odd_a / 2};
}

Partition constructed_union(const ArthurPartitionData& psi) {
  const auto [p1, n_star] = p1_and_nstar(psi);
  std::vector<int> extra;
  switch (psi.group().family) {
    case Family::C: extra = {2 * n_star}; break;
    case Family::B: extra = {2 * n_star + 1}; break;
    case Family::D:
      if (n_star > 0) extra = {2 * n_star - 1, 1};
      break;
  }
  return union_parts(union_parts(p1, p1), Partition::from_unsorted(extra));
}

Partition constructed_member_partition(const ArthurPartitionData& psi) {
  return expansion(constructed_union(psi), psi.group());
}

std::string to_string(SufficientClass c) {
  switch (c) {
    case SufficientClass::kCi: return "C-i";
    case SufficientClass::kCii: return "C-ii";
    case SufficientClass::kBi: return "B-i";
    case SufficientClass::kBii: return "B-ii";
    case SufficientClass::kDSameParity: return "D-same-parity";
    case SufficientClass::kNone: return "none";
  }
  return "none";
}

SufficientClass sufficient_condition_class(const ArthurPartitionData& psi) {
  const auto& f = psi.factors();
  const auto all_of_parity = [](auto first, auto last, int parity) {
    return std::all_of(first, last,
                       [parity](const ArthurFactor& x) { return x.b % 2 == parity; });
  };
  switch (psi.group().family) {
    case Family::C:
      if (!f.empty() && f.back().a == 1 && f.back().b == 1 &&
          all_of_parity(f.begin(), f.end() - 1, 0)) {
        return SufficientClass::kCi;
      }
      if (all_of_parity(f.begin(), f.end(), 1)) return SufficientClass::kCii;
      return SufficientClass::kNone;
    case Family::B:
      if (!f.empty() && f.front().b % 2 == 0 && f.front().a == 1 &&
          all_of_parity(f.begin() + 1, f.end(), 1)) {
        return SufficientClass::kBi;
      }
      if (all_of_parity(f.begin(), f.end(), 0)) return SufficientClass::kBii;
      return SufficientClass::kNone;
    case Family::D:
      if (all_of_parity(f.begin(), f.end(), 0) ||
          all_of_parity(f.begin(), f.end(), 1)) {
        return SufficientClass::kDSameParity;
      }
      return SufficientClass::kNone;
  }
  return SufficientClass::kNone;
}

CriterionResult check_criterion(const ArthurPartitionData& psi) {
  const GroupType& g = psi.group();
  const Partition u = constructed_union(psi);
  CriterionResult out;
  switch (g.family) {
    case Family::C:
      out.lhs = collapse(transpose(u), g);
      out.rhs = collapse(dec_min(psi.p_psi()), g);
      break;
    case Family::B:
      out.lhs = collapse(transpose(u), g);
      out.rhs = collapse(inc_max(psi.p_psi()), g);
      break;
    case Family::D:
      out.lhs = expansion(u, g);
      out.rhs = collapse(transpose(psi.p_psi()), g);
      break;
  }
  out.verdict = out.lhs == out.rhs;
  out.tag = sufficient_condition_class(psi);
  return out;
}

CriterionResult check_expansion_form(const ArthurPartitionData& psi) {
  CriterionResult out;
  out.lhs = constructed_member_partition(psi);
  out.rhs = eta(psi.p_psi(), psi.group().dual());
  out.verdict = out.lhs == out.rhs;
  out.tag = sufficient_condition_class(psi);
  return out;
}

DominanceCheck check_prop58(const ArthurPartitionData& psi) {
  DominanceCheck out;
  out.constructed = constructed_member_partition(psi);
  out.eta = eta(psi.p_psi(), psi.group().dual());
  out.holds = dominance_leq(out.constructed, out.eta);
  out.strict = out.holds && out.constructed != out.eta;
  out.asserted = psi.group().family != Family::D;
  return out;
}

std::vector<ArthurPartitionData> enumerate_parameters(const GroupType& group) {
  std::vector<ArthurPartitionData> out;
  const GroupType side = group.dual();
  for (const auto& p : enumerate_type_partitions(side)) {
    out.push_back(ArthurPartitionData::from_partition(group, p));
  }
  return out;
}

}  // namespace orbitcalc
