#include "orbitcalc/dimensions.hpp"

#include "orbitcalc/bv_duality.hpp"

namespace orbitcalc {

long long dim_orbit(const Partition& p, const GroupType& group) {
  if (!is_type(p, group)) {
    throw Error(ErrorCode::kTypeMismatch,
                "dim: " + to_string(p) + " is not a " + group.name() +
                    " partition");
  }
  // Everything below is twice the dimension.
  const auto st = stats(p);
  long long sum_sq = 0;
  for (int s : st.s) sum_sq += static_cast<long long>(s) * s;
  long long odd_r = 0;
  for (std::size_t i = 0; i < st.r.size(); i += 2) odd_r += st.r[i];
  const long long k = group.rank;
  long long twice = 0;
  switch (group.family) {
    case Family::C: twice = 2 * (2 * k * k + k) - sum_sq - odd_r; break;
    case Family::B: twice = 2 * (2 * k * k + k) - sum_sq + odd_r; break;
    case Family::D: twice = 2 * (2 * k * k - k) - sum_sq + odd_r; break;
  }
  if (twice < 0 || twice % 4 != 0) {
    throw Error(ErrorCode::kInternal, "dim: formula gave 2*dim = " +
                                          std::to_string(twice) + " for " +
                                          to_string(p) + " in " + group.name());
  }
  return twice / 2;
}

long long dim_group(const GroupType& group) {
  const long long n = group.rank;
  return group.family == Family::D ? 2 * n * n - n : 2 * n * n + n;
}

namespace {

DimTerm term(std::string label, const GroupType& g, Partition p) {
  DimTerm t{std::move(label), g, std::move(p), dim_group(g), 0};
  t.orbit_dim = dim_orbit(t.partition, g);
  return t;
}

long long codim(const DimTerm& t) { return t.group_dim - t.orbit_dim; }

}  // namespace

VerificationItem verify_lemma41(const ArthurPartitionData& psi) {
  const GroupType& g = psi.group();
  VerificationItem item;
  item.terms.push_back(term("lhs", g, eta(psi.p_psi(), g.dual())));
  item.lhs = codim(item.terms.back());

  const EndoscopicSplit split = split_IJ(psi);
  long long rhs = 0;
  long long rhs_dual = 0;
  int k = 0;
  for (const ArthurPartitionData* part : {&split.psi1, &split.psi2}) {
    ++k;
    const GroupType gk = part->group();
    const GroupType hat = gk.dual();
    DimTerm dual_term = term("dual" + std::to_string(k), hat,
                             collapse(transpose(part->p_psi()), hat));
    rhs_dual += codim(dual_term);
    if (g.family == Family::C && k == 1) {
      DimTerm own = term("rhs1", gk, eta(part->p_psi(), hat));
      rhs += codim(own);
      item.terms.push_back(std::move(own));
    } else {
      rhs += codim(dual_term);
      dual_term.label = "rhs" + std::to_string(k);
    }
    item.terms.push_back(std::move(dual_term));
  }
  item.rhs = rhs;
  item.rhs_dual = rhs_dual;
  item.holds = item.lhs == item.rhs && item.rhs == item.rhs_dual;
  return item;
}

VerificationItem verify_prop42(const Partition& p, const GroupType& source) {
  const GroupType target = eta_target(source);
  VerificationItem item;
  item.terms.push_back(term("lhs", target, eta(p, source)));
  item.terms.push_back(term("rhs", source, collapse(transpose(p), source)));
  item.lhs = item.terms[0].orbit_dim;
  item.rhs = item.terms[1].orbit_dim;
  item.rhs_dual = item.rhs;
  item.holds = item.lhs == item.rhs;
  return item;
}

}  // namespace orbitcalc
