#include "orbitcalc/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace orbitcalc {

namespace {

// Parts of this parity must occur with even multiplicity.
int constrained_parity(Family family) { return family == Family::C ? 1 : 0; }

void require_size(const Partition& p, const GroupType& group,
                  const char* what) {
  if (p.size() != group.partition_size()) {
    throw Error(ErrorCode::kSizeMismatch,
                std::string(what) + ": " + to_string(p) + " has size " +
                    std::to_string(p.size()) + " but " + group.name() +
                    " needs " + std::to_string(group.partition_size()));
  }
}

void require_type(const Partition& p, const GroupType& group,
                  const char* what) {
  require_size(p, group, what);
  if (!has_family_parity(p, group.family)) {
    throw Error(ErrorCode::kTypeMismatch, std::string(what) + ": " +
                                              to_string(p) + " is not a " +
                                              group.name() + " partition");
  }
}

// Largest part of the constrained parity with odd multiplicity, or 0.
int largest_violation(const std::vector<int>& parts, int parity) {
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == parity && (j - i) % 2 == 1) return parts[i];
    i = j;
  }
  return 0;
}

// Partitions covering p from above: move one box to an earlier row so that
// the result stays weakly decreasing.
std::vector<Partition> raises(const Partition& p) {
  std::vector<int> base(p.parts().begin(), p.parts().end());
  base.push_back(0);
  std::vector<Partition> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i > 0 && base[i] + 1 > base[i - 1]) continue;
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      if (base[j] == 0) break;
      if (j + 1 < base.size() && base[j] - 1 < base[j + 1]) continue;
      std::vector<int> q = base;
      ++q[i];
      --q[j];
      out.push_back(Partition::from_unsorted(std::move(q)));
    }
  }
  return out;
}

// Minimal elements of a set under dominance.
std::vector<Partition> dominance_minima(const std::vector<Partition>& items) {
  std::vector<Partition> out;
  for (const auto& x : items) {
    bool minimal = std::none_of(items.begin(), items.end(), [&](const auto& y) {
      return y != x && dominance_leq(y, x);
    });
    if (minimal) out.push_back(x);
  }
  return out;
}

std::string list_string(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += ", ";
    s += to_string(p);
  }
  return s;
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

int GroupType::partition_size() const {
  return family == Family::B ? 2 * rank + 1 : 2 * rank;
}

GroupType GroupType::dual() const {
  switch (family) {
    case Family::B: return {Family::C, rank};
    case Family::C: return {Family::B, rank};
    case Family::D: return {Family::D, rank};
  }
  return *this;
}

std::string GroupType::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

GroupType make_group(Family family, int rank) {
  if (rank < 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "negative rank " + std::to_string(rank));
  }
  // Keep 2n+1 representable.
  if (rank > (1 << 29)) {
    throw Error(ErrorCode::kOverflow, "rank too large");
  }
  return {family, rank};
}

bool is_orthogonal(const Partition& p) {
  const auto pw = p.powers();
  return std::all_of(pw.begin(), pw.end(), [](PartPower x) {
    return x.part % 2 == 1 || x.multiplicity % 2 == 0;
  });
}

bool is_symplectic(const Partition& p) {
  const auto pw = p.powers();
  return std::all_of(pw.begin(), pw.end(), [](PartPower x) {
    return x.part % 2 == 0 || x.multiplicity % 2 == 0;
  });
}

bool has_family_parity(const Partition& p, Family family) {
  return family == Family::C ? is_symplectic(p) : is_orthogonal(p);
}

bool is_type(const Partition& p, const GroupType& group) {
  return p.size() == group.partition_size() &&
         has_family_parity(p, group.family);
}

bool is_very_even(const Partition& p, const GroupType& group) {
  if (group.family != Family::D || p.empty() || !is_type(p, group)) return false;
  return std::all_of(p.parts().begin(), p.parts().end(),
                     [](int x) { return x % 2 == 0; });
}

OrbitPartition make_orbit(Partition p, const GroupType& group,
                          std::optional<VeryEvenLabel> label) {
  require_type(p, group, "orbit");
  if (is_very_even(p, group) != label.has_value()) {
    throw Error(ErrorCode::kTypeMismatch,
                "very even label must be given exactly for very even type D "
                "partitions: " +
                    to_string(p));
  }
  return {std::move(p), group, label};
}

Partition collapse(const Partition& p, const GroupType& group) {
  require_size(p, group, "collapse");
  const int parity = constrained_parity(group.family);
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  for (int q = largest_violation(parts, parity); q != 0;
       q = largest_violation(parts, parity)) {
    auto last = std::find_if(parts.rbegin(), parts.rend(),
                             [q](int x) { return x == q; });
    const auto idx = static_cast<std::size_t>(parts.rend() - last - 1);
    --parts[idx];
    std::size_t k = idx + 1;
    while (k < parts.size() && parts[k] >= q - 1) ++k;
    if (k == parts.size()) parts.push_back(0);
    ++parts[k];
    std::erase(parts, 0);
  }
  return Partition(std::move(parts));
}

Partition spaltenstein_dual(const Partition& p, const GroupType& group) {
  require_type(p, group, "spaltenstein_dual");
  return collapse(transpose(p), group);
}

bool is_special(const Partition& p, const GroupType& group) {
  require_type(p, group, "is_special");
  return spaltenstein_dual(spaltenstein_dual(p, group), group) == p;
}

Partition expansion(const Partition& p, const GroupType& group) {
  require_size(p, group, "expansion");
  // For a type partition q, d(d(q)) is special and dominates q, and every
  // special s >= q satisfies s = d(d(s)) >= d(d(q)).
  if (has_family_parity(p, group.family)) {
    return spaltenstein_dual(spaltenstein_dual(p, group), group);
  }
  // Otherwise walk up the covering relation through non-type partitions to
  // collect the minimal type partitions above p; the specials above p are
  // the union of the up-sets of their d∘d images.
  std::set<Partition> seen{p};
  std::vector<Partition> frontier{p};
  std::vector<Partition> reached;
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& x : frontier) {
      for (auto& y : raises(x)) {
        if (!seen.insert(y).second) continue;
        if (has_family_parity(y, group.family)) {
          reached.push_back(y);
        } else {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  if (reached.empty()) {
    throw Error(ErrorCode::kNoExtremum, "expansion: no " + group.name() +
                                            " partition dominates " +
                                            to_string(p));
  }
  std::set<Partition> images;
  for (const auto& m : dominance_minima(reached)) {
    images.insert(spaltenstein_dual(spaltenstein_dual(m, group), group));
  }
  const std::vector<Partition> candidates(images.begin(), images.end());
  const auto lows = dominance_minima(candidates);
  if (lows.size() != 1) {
    throw Error(ErrorCode::kAmbiguousExtremum,
                "expansion: special " + group.name() + " partitions above " +
                    to_string(p) + " have no unique minimum (" +
                    list_string(lows) + ")");
  }
  return lows.front();
}

std::vector<Partition> enumerate_type_partitions(const GroupType& group) {
  std::vector<Partition> out;
  const int parity = constrained_parity(group.family);
  for_each_partition(group.partition_size(), [&](const std::vector<int>& parts) {
    if (largest_violation(parts, parity) == 0) out.emplace_back(parts);
  });
  return out;
}

Partition collapse_oracle(const Partition& p, const GroupType& group) {
  require_size(p, group, "collapse_oracle");
  std::vector<Partition> below;
  for (auto& q : enumerate_type_partitions(group)) {
    if (dominance_leq(q, p)) below.push_back(std::move(q));
  }
  std::vector<Partition> tops;
  for (const auto& q : below) {
    if (std::all_of(below.begin(), below.end(),
                    [&](const auto& r) { return dominance_leq(r, q); })) {
      tops.push_back(q);
    }
  }
  if (below.empty()) {
    throw Error(ErrorCode::kNoExtremum,
                "collapse_oracle: no " + group.name() + " partition below " +
                    to_string(p));
  }
  if (tops.size() != 1) {
    throw Error(ErrorCode::kAmbiguousExtremum,
                "collapse_oracle: no unique maximum below " + to_string(p));
  }
  return tops.front();
}

namespace {

// Special partitions of a group, with specialness decided through
// collapse_oracle so the expansion oracle never touches the recipe.
const std::vector<Partition>& oracle_specials(const GroupType& group) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Partition>> cache;
  const std::pair<int, int> key{static_cast<int>(group.family), group.rank};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Partition> specials;
  for (auto& q : enumerate_type_partitions(group)) {
    const Partition dq = collapse_oracle(transpose(q), group);
    if (collapse_oracle(transpose(dq), group) == q) {
      specials.push_back(std::move(q));
    }
  }
  return cache.emplace(key, std::move(specials)).first->second;
}

}  // namespace

Partition expansion_oracle(const Partition& p, const GroupType& group) {
  require_size(p, group, "expansion_oracle");
  std::vector<Partition> above;
  for (const auto& q : oracle_specials(group)) {
    if (dominance_leq(p, q)) above.push_back(q);
  }
  if (above.empty()) {
    throw Error(ErrorCode::kNoExtremum, "expansion_oracle: no special " +
                                            group.name() +
                                            " partition dominates " +
                                            to_string(p));
  }
  std::vector<Partition> bottoms;
  for (const auto& q : above) {
    if (std::all_of(above.begin(), above.end(),
                    [&](const auto& r) { return dominance_leq(q, r); })) {
      bottoms.push_back(q);
    }
  }
  if (bottoms.size() != 1) {
    throw Error(ErrorCode::kAmbiguousExtremum,
                "expansion_oracle: special " + group.name() +
                    " partitions above " + to_string(p) +
                    " have no unique minimum (" +
                    list_string(dominance_minima(above)) + ")");
  }
  return bottoms.front();
}

}  // namespace orbitcalc
