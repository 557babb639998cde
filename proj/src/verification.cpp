#include "orbitcalc/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "orbitcalc/arthur.hpp"
#include "orbitcalc/bv_duality.hpp"
#include "orbitcalc/dimensions.hpp"
#include "orbitcalc/json_io.hpp"

namespace orbitcalc {

using nlohmann::json;

namespace {

struct Names {
  Identity id;
  const char* name;
};

constexpr Names kNames[] = {
    {Identity::kLemma41, "lemma41"},
    {Identity::kProp42, "prop42"},
    {Identity::kThm56Equiv, "thm56-equiv"},
    {Identity::kThm19Sufficient, "thm19-sufficient"},
    {Identity::kProp58, "prop58"},
    {Identity::kCollapseOracle, "collapse-oracle"},
    {Identity::kExpansionOracle, "expansion-oracle"},
    {Identity::kAchar, "achar"},
    {Identity::kSpecialCharacterization, "special-characterization"},
    {Identity::kEtaRoutes, "eta-routes"},
    {Identity::kEtaSpecial, "eta-special"},
    {Identity::kEtaOrderReversing, "eta-order-reversing"},
    {Identity::kBoundaryOps, "boundary-ops"},
    {Identity::kInducedSum, "induced-sum"},
    {Identity::kDimSanity, "dim-sanity"},
};

// Result of one shard of a sweep.
struct Shard {
  long long total = 0;
  long long passes = 0;
  std::vector<json> witnesses;
  std::map<std::string, long long> tallies;

  void record(bool pass, const std::function<json()>& witness) {
    ++total;
    if (pass) {
      ++passes;
    } else {
      witnesses.push_back(witness());
    }
  }
};

using ShardFn = std::function<Shard()>;

std::vector<Shard> run_parallel(const std::vector<ShardFn>& shards, int jobs) {
  std::vector<Shard> out(shards.size());
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                              : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(shards.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < shards.size(); ++i) out[i] = shards[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < shards.size(); i = next++) {
          out[i] = shards[i]();
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next = shards.size();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<Family> families_for(const SweepConfig& c,
                                 std::vector<Family> fallback) {
  if (c.family) return {*c.family};
  return fallback;
}

std::string family_label(const SweepConfig& c) {
  return c.family ? std::string(1, family_letter(*c.family)) : "all";
}

json error_witness(const std::string& input, const Error& e) {
  return {{"input", input}, {"error", e.what()}};
}

// Runs `check` on every parameter of G_n, catching library errors as
// failures.
template <typename Check>
ShardFn parameter_shard(GroupType g, Check check) {
  return [g, check] {
    Shard s;
    for (const auto& psi : enumerate_parameters(g)) {
      try {
        check(psi, s);
      } catch (const Error& e) {
        s.record(false, [&] { return error_witness(to_string(psi), e); });
      }
    }
    return s;
  };
}

// Type partitions of `group`, or of every family fitting a size.
std::vector<GroupType> groups_of_size(int size, const std::vector<Family>& fams) {
  std::vector<GroupType> out;
  for (Family f : fams) {
    if ((f == Family::B) == (size % 2 == 1)) out.push_back(make_group(f, size / 2));
  }
  return out;
}

std::string name_of(const Partition& p, const GroupType& g) {
  return g.name() + ":" + to_string(p);
}

// --- individual identities -------------------------------------------------

void lemma41(const ArthurPartitionData& psi, Shard& s) {
  const auto item = verify_lemma41(psi);
  if (item.rhs != item.rhs_dual) ++s.tallies["rhs_forms_differ"];
  s.record(item.holds, [&] {
    json w = item_json(item);
    w["input"] = to_string(psi);
    return w;
  });
}

void thm56(const ArthurPartitionData& psi, Shard& s) {
  const auto crit = check_criterion(psi);
  const auto expd = check_expansion_form(psi);
  ++s.tallies[crit.verdict ? "criterion_true" : "criterion_false"];
  ++s.tallies[expd.verdict ? "expansion_true" : "expansion_false"];
  s.record(crit.verdict == expd.verdict, [&] {
    return json{{"input", to_string(psi)},
                {"criterion", criterion_json(crit)},
                {"expansion_form", criterion_json(expd)}};
  });
}

void thm19(const ArthurPartitionData& psi, Shard& s) {
  const auto tag = sufficient_condition_class(psi);
  if (tag == SufficientClass::kNone) return;
  const auto crit = check_criterion(psi);
  ++s.tallies[to_string(tag)];
  s.record(crit.verdict, [&] {
    json w = criterion_json(crit);
    w["input"] = to_string(psi);
    return w;
  });
}

void prop58(const ArthurPartitionData& psi, Shard& s) {
  const auto d = check_prop58(psi);
  ++s.tallies[!d.holds ? "not_dominated" : d.strict ? "strict" : "equal"];
  s.record(d.holds, [&] {
    json w = dominance_json(d);
    w["input"] = to_string(psi);
    return w;
  });
}

ShardFn collapse_oracle_shard(int size, GroupType g) {
  return [size, g] {
    Shard s;
    for_each_partition(size, [&](const std::vector<int>& parts) {
      const Partition p(parts);
      const Partition fast = collapse(p, g);
      Partition slow;
      std::string err;
      try {
        slow = collapse_oracle(p, g);
      } catch (const Error& e) {
        err = e.what();
      }
      if (fast == p) ++s.tallies["already_type"];
      s.record(err.empty() && fast == slow, [&] {
        return json{{"input", name_of(p, g)},
                    {"recipe", fast},
                    {"oracle", err.empty() ? json(slow) : json(err)}};
      });
    });
    return s;
  };
}

// Result of an expansion call: the partition or the error kind.
struct Outcome {
  std::optional<Partition> value;
  std::optional<ErrorCode> error;
  std::string message;
};

template <typename F>
Outcome capture(F f) {
  Outcome o;
  try {
    o.value = f();
  } catch (const Error& e) {
    o.error = e.code();
    o.message = e.what();
  }
  return o;
}

json outcome_json(const Outcome& o) {
  return o.value ? json(*o.value) : json(o.message);
}

ShardFn expansion_oracle_shard(int size, GroupType g) {
  return [size, g] {
    Shard s;
    for_each_partition(size, [&](const std::vector<int>& parts) {
      const Partition p(parts);
      const Outcome fast = capture([&] { return expansion(p, g); });
      const Outcome slow = capture([&] { return expansion_oracle(p, g); });
      if (slow.error == ErrorCode::kAmbiguousExtremum) ++s.tallies["tie"];
      if (slow.error == ErrorCode::kNoExtremum) ++s.tallies["none_above"];
      const bool agree = fast.value == slow.value && fast.error == slow.error;
      s.record(agree, [&] {
        return json{{"input", name_of(p, g)},
                    {"recipe", outcome_json(fast)},
                    {"oracle", outcome_json(slow)}};
      });
    });
    return s;
  };
}

ShardFn achar_shard(int size) {
  return [size] {
    Shard s;
    if (size % 2 != 0) return s;
    for_each_partition(size, [&](const std::vector<int>& parts) {
      const Partition p(parts);
      if (!is_orthogonal(p) && !is_symplectic(transpose(p))) return;
      ++s.tallies[is_orthogonal(p) ? "orthogonal" : "transpose_symplectic_only"];
      s.record(achar_identity_check(p), [&] {
        return json{{"input", to_string(p)}};
      });
    });
    return s;
  };
}

ShardFn special_shard(GroupType g) {
  return [g] {
    Shard s;
    const auto all = enumerate_type_partitions(g);
    std::set<Partition> image;
    for (const auto& p : all) image.insert(spaltenstein_dual(p, g));
    for (const auto& p : all) {
      const bool special = is_special(p, g);
      const Partition t = transpose(p);
      // Transpose-type characterisations: B needs p^t orthogonal, C and D
      // need p^t symplectic.
      const bool by_transpose =
          g.family == Family::B ? is_orthogonal(t) : is_symplectic(t);
      if (special != by_transpose) ++s.tallies["transpose_form_mismatch"];
      if (special) ++s.tallies["special"];
      s.record(special == image.contains(p), [&] {
        return json{{"input", name_of(p, g)},
                    {"special", special},
                    {"in_image", image.contains(p)}};
      });
    }
    if (g.family == Family::D) {
      // Orthogonal p: compare "p^t orthogonal" with "p symplectic" in both
      // directions.
      for (const auto& p : all) {
        const bool t_orth = is_orthogonal(transpose(p));
        const bool symp = is_symplectic(p);
        if (t_orth && !symp) ++s.tallies["transpose_orthogonal_not_symplectic"];
        if (symp && !t_orth) ++s.tallies["symplectic_transpose_not_orthogonal"];
      }
    }
    return s;
  };
}

ShardFn eta_shard(Identity id, GroupType source) {
  return [id, source] {
    Shard s;
    const auto all = enumerate_type_partitions(source);
    const GroupType target = eta_target(source);
    if (id == Identity::kEtaOrderReversing) {
      std::vector<Partition> images;
      for (const auto& p : all) images.push_back(eta(p, source));
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (i == j || !dominance_leq(all[i], all[j])) continue;
          s.record(dominance_leq(images[j], images[i]), [&] {
            return json{{"lower", name_of(all[i], source)},
                        {"upper", name_of(all[j], source)},
                        {"eta_lower", images[i]},
                        {"eta_upper", images[j]}};
          });
        }
      }
      return s;
    }
    for (const auto& p : all) {
      if (id == Identity::kEtaRoutes) {
        const Partition a = eta(p, source);
        const Partition b = eta_alt(p, source);
        s.record(a == b, [&] {
          return json{{"input", name_of(p, source)}, {"eta", a}, {"eta_alt", b}};
        });
      } else {
        const Partition e = eta(p, source);
        const Partition plain = collapse(transpose(p), source);
        if (!is_special(plain, source)) ++s.tallies["collapse_transpose_not_special"];
        s.record(is_special(e, target), [&] {
          return json{{"input", name_of(p, source)}, {"eta", e}};
        });
      }
    }
    return s;
  };
}

ShardFn boundary_shard(int size) {
  return [size] {
    Shard s;
    for_each_partition(size, [&](const std::vector<int>& parts) {
      const Partition p(parts);
      if (!p.empty()) {
        const Partition a = dec_max(p);
        const Partition b = transpose(dec_min(transpose(p)));
        s.record(a == b, [&] {
          return json{{"input", to_string(p)}, {"op", "dec_max"}, {"direct", a}, {"via_transpose", b}};
        });
      }
      const Partition a = append_one(p);
      const Partition b = transpose(inc_max(transpose(p)));
      s.record(a == b, [&] {
        return json{{"input", to_string(p)}, {"op", "append_one"}, {"direct", a}, {"via_transpose", b}};
      });
    });
    return s;
  };
}

// Multisets of (a, b) pairs with sum of a*b equal to `size`, pairs taken in
// non-increasing (b, a) order.
void pair_multisets(int remaining, std::pair<int, int> cap,
                    std::vector<ArthurFactor>& prefix,
                    const std::function<void(const std::vector<ArthurFactor>&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int b = std::min(remaining, cap.first); b >= 1; --b) {
    const int a_cap = b == cap.first ? cap.second : remaining / b;
    for (int a = std::min(a_cap, remaining / b); a >= 1; --a) {
      prefix.push_back({a, b});
      pair_multisets(remaining - a * b, {b, a}, prefix, visit);
      prefix.pop_back();
    }
  }
}

ShardFn induced_shard(int size) {
  return [size] {
    Shard s;
    std::vector<ArthurFactor> prefix;
    pair_multisets(size, {size, size}, prefix, [&](const std::vector<ArthurFactor>& fs) {
      Partition sum;
      std::vector<PartPower> powers;
      for (const auto& f : fs) {
        sum = pointwise_sum(sum, Partition::from_powers(std::vector<PartPower>{{f.a, f.b}}));
        powers.push_back({f.b, f.a});
      }
      const Partition direct = transpose(Partition::from_powers(powers));
      s.record(sum == direct, [&] {
        json in = json::array();
        for (const auto& f : fs) in.push_back({{"a", f.a}, {"b", f.b}});
        return json{{"input", in}, {"sum", sum}, {"transpose", direct}};
      });
    });
    return s;
  };
}

ShardFn dim_shard(GroupType g) {
  return [g] {
    Shard s;
    const auto all = enumerate_type_partitions(g);
    std::vector<long long> dims;
    for (const auto& p : all) dims.push_back(dim_orbit(p, g));
    const int n = g.partition_size();
    const Partition zero = Partition::column(n);
    const Partition regular = collapse(Partition::row(n), g);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] == zero) {
        ++s.tallies["zero_orbit"];
        s.record(dims[i] == 0, [&] {
          return json{{"input", name_of(zero, g)}, {"dim", dims[i]}};
        });
      }
      if (all[i] == regular && g.family != Family::D) {
        ++s.tallies["regular_orbit"];
        const long long want = dim_group(g) - g.rank;
        s.record(dims[i] == want, [&] {
          return json{{"input", name_of(regular, g)}, {"dim", dims[i]}, {"expected", want}};
        });
      }
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j || !dominance_leq(all[i], all[j])) continue;
        s.record(dims[i] <= dims[j], [&] {
          return json{{"lower", name_of(all[i], g)}, {"upper", name_of(all[j], g)},
                      {"dim_lower", dims[i]}, {"dim_upper", dims[j]}};
        });
      }
    }
    return s;
  };
}

const std::vector<Family> kAll = {Family::B, Family::C, Family::D};
const std::vector<Family> kBC = {Family::B, Family::C};

}  // namespace

std::string identity_name(Identity id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

Identity parse_identity(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.id;
  }
  throw Error(ErrorCode::kParse, "unknown identity '" + name + "'");
}

std::vector<Identity> all_identities() {
  std::vector<Identity> out;
  for (const auto& n : kNames) out.push_back(n.id);
  return out;
}

bool is_size_sweep(Identity id) {
  switch (id) {
    case Identity::kLemma41:
    case Identity::kProp42:
    case Identity::kThm56Equiv:
    case Identity::kThm19Sufficient:
    case Identity::kProp58:
      return false;
    default:
      return true;
  }
}

VerificationReport run_sweep(const SweepConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.identity = identity_name(c.identity);
  r.family = family_label(c);
  r.range_kind = is_size_sweep(c.identity) ? "size" : "rank";
  r.min = c.min;
  r.max = c.max;

  std::vector<ShardFn> shards;
  const auto per_rank = [&](const std::vector<Family>& fams, auto check) {
    for (Family f : fams) {
      for (int n = c.min; n <= c.max; ++n) {
        shards.push_back(parameter_shard(make_group(f, n), check));
      }
    }
  };
  const auto per_size = [&](const std::vector<Family>& fams, auto make) {
    for (int size = c.min; size <= c.max; ++size) {
      for (const auto& g : groups_of_size(size, fams)) shards.push_back(make(size, g));
    }
  };

  switch (c.identity) {
    case Identity::kLemma41:
      per_rank(families_for(c, kAll), lemma41);
      break;
    case Identity::kProp42:
      for (Family f : families_for(c, kAll)) {
        for (int n = c.min; n <= c.max; ++n) {
          const GroupType source = make_group(f, n).dual();
          shards.push_back([source] {
            Shard s;
            for (const auto& p : enumerate_type_partitions(source)) {
              const auto item = verify_prop42(p, source);
              s.record(item.holds, [&] {
                json w = item_json(item);
                w["input"] = name_of(p, source);
                return w;
              });
            }
            return s;
          });
        }
      }
      break;
    case Identity::kThm56Equiv:
      per_rank(families_for(c, kBC), thm56);
      r.asserted = !(c.family && *c.family == Family::D);
      break;
    case Identity::kThm19Sufficient:
      per_rank(families_for(c, kAll), thm19);
      break;
    case Identity::kProp58:
      per_rank(families_for(c, kBC), prop58);
      r.asserted = !(c.family && *c.family == Family::D);
      break;
    case Identity::kCollapseOracle:
      per_size(families_for(c, kAll), collapse_oracle_shard);
      break;
    case Identity::kExpansionOracle:
      per_size(families_for(c, kAll), expansion_oracle_shard);
      break;
    case Identity::kAchar:
      r.family = "D";
      for (int size = c.min; size <= c.max; ++size) shards.push_back(achar_shard(size));
      break;
    case Identity::kSpecialCharacterization:
      per_size(families_for(c, kAll), [](int, GroupType g) { return special_shard(g); });
      break;
    case Identity::kEtaRoutes:
    case Identity::kEtaOrderReversing:
      per_size(families_for(c, kAll),
               [&](int, GroupType g) { return eta_shard(c.identity, g); });
      break;
    case Identity::kEtaSpecial:
      per_size(families_for(c, kAll),
               [&](int, GroupType g) { return eta_shard(c.identity, g); });
      r.asserted = false;
      break;
    case Identity::kBoundaryOps:
      r.family = "all";
      for (int size = c.min; size <= c.max; ++size) shards.push_back(boundary_shard(size));
      break;
    case Identity::kInducedSum:
      r.family = "all";
      for (int size = c.min; size <= c.max; ++size) shards.push_back(induced_shard(size));
      break;
    case Identity::kDimSanity:
      per_size(families_for(c, kAll), [](int, GroupType g) { return dim_shard(g); });
      break;
  }

  for (auto& s : run_parallel(shards, c.jobs)) {
    r.total += s.total;
    r.passes += s.passes;
    for (auto& w : s.witnesses) {
      if (r.witnesses.size() < c.max_witnesses) r.witnesses.push_back(std::move(w));
    }
    for (const auto& [k, v] : s.tallies) r.tallies[k] += v;
  }
  r.failures = r.total - r.passes;
  r.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json report_json(const VerificationReport& r, bool with_duration) {
  json j{{"identity", r.identity},
         {"family", r.family},
         {"range", {{"kind", r.range_kind}, {"min", r.min}, {"max", r.max}}},
         {"total", r.total},
         {"passes", r.passes},
         {"failures", r.failures},
         {"asserted", r.asserted},
         {"ok", r.ok()},
         {"witnesses", r.witnesses},
         {"tallies", r.tallies}};
  if (with_duration) j["duration_seconds"] = r.duration_seconds;
  return j;
}

json search_counterexamples(Family family, int max_n, int jobs) {
  std::vector<ShardFn> shards;
  for (int n = 0; n <= max_n; ++n) {
    shards.push_back(parameter_shard(make_group(family, n),
                                     [](const ArthurPartitionData& psi, Shard& s) {
      const auto d = check_prop58(psi);
      if (d.constructed == d.eta) return;
      s.record(false, [&] {
        return json{{"psi", parameter_json(psi)},
                    {"constructed", d.constructed},
                    {"eta", d.eta},
                    {"strict", d.strict},
                    {"criterion", check_criterion(psi).verdict}};
      });
    }));
  }
  json list = json::array();
  for (auto& s : run_parallel(shards, jobs)) {
    for (auto& w : s.witnesses) list.push_back(std::move(w));
  }
  return {{"family", std::string(1, family_letter(family))},
          {"max_n", max_n},
          {"count", list.size()},
          {"counterexamples", list}};
}

}  // namespace orbitcalc
