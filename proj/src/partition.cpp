#include "orbitcalc/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace orbitcalc {

namespace detail {

int checked_add(int a, int b) {
  int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in partition arithmetic");
  }
  return out;
}

int checked_mul(int a, int b) {
  int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in partition arithmetic");
  }
  return out;
}

}  // namespace detail

namespace {

std::string describe(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw Error(ErrorCode::kMalformedPartition,
                  "partition parts must be positive: " + describe(parts_));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorCode::kMalformedPartition,
                  "partition parts must be weakly decreasing: " +
                      describe(parts_));
    }
    size_ = detail::checked_add(size_, parts_[i]);
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw Error(ErrorCode::kMalformedPartition,
                "negative part in " + describe(parts));
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_powers(std::span<const PartPower> powers) {
  std::vector<int> parts;
  for (const auto& pw : powers) {
    if (pw.part <= 0 || pw.multiplicity <= 0) {
      throw Error(ErrorCode::kMalformedPartition,
                  "exponent form needs positive part and multiplicity, got " +
                      std::to_string(pw.part) + "^" +
                      std::to_string(pw.multiplicity));
    }
    // Bound the allocation before inserting.
    detail::checked_mul(pw.part, pw.multiplicity);
    parts.insert(parts.end(), static_cast<std::size_t>(pw.multiplicity),
                 pw.part);
  }
  return from_unsorted(std::move(parts));
}

Partition Partition::row(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

int Partition::multiplicity(int value) const noexcept {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value,
                                   std::greater<>());
  return static_cast<int>(hi - lo);
}

std::vector<PartPower> Partition::powers() const {
  std::vector<PartPower> out;
  for (int x : parts_) {
    if (!out.empty() && out.back().part == x) {
      ++out.back().multiplicity;
    } else {
      out.push_back({x, 1});
    }
  }
  return out;
}

std::string to_string(const Partition& p) {
  return describe(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition transpose(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int x : p.parts()) {
    for (int i = 0; i < x; ++i) ++cols[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(cols));
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "dominance comparison between partitions of different sizes: " +
                    to_string(p) + " (" + std::to_string(p.size()) + ") vs " +
                    to_string(q) + " (" + std::to_string(q.size()) + ")");
  }
  int sp = 0;
  int sq = 0;
  const std::size_t len = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < len; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

bool dominance_less(const Partition& p, const Partition& q) {
  return dominance_leq(p, q) && p != q;
}

bool incomparable(const Partition& p, const Partition& q) {
  return !dominance_leq(p, q) && !dominance_leq(q, p);
}

Partition dec_min(const Partition& p) {
  if (p.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "p^- of the empty partition");
  }
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  if (--parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition inc_max(const Partition& p) {
  if (p.empty()) return Partition::row(1);
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  parts.front() = detail::checked_add(parts.front(), 1);
  return Partition(std::move(parts));
}

Partition dec_max(const Partition& p) {
  if (p.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "p_- of the empty partition");
  }
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  --parts.front();
  return Partition::from_unsorted(std::move(parts));
}

Partition append_one(const Partition& p) {
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  parts.push_back(1);
  return Partition(std::move(parts));
}

Partition plus_minus(const Partition& p) {
  if (p.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "p^{+-} of the empty partition");
  }
  return dec_min(inc_max(p));
}

Partition union_parts(const Partition& p, const Partition& q) {
  std::vector<int> parts;
  parts.reserve(p.length() + q.length());
  std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(),
             q.parts().end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition pointwise_sum(const Partition& p, const Partition& q) {
  const std::size_t len = std::max(p.length(), q.length());
  std::vector<int> parts(len);
  for (std::size_t i = 0; i < len; ++i) {
    parts[i] = detail::checked_add(p.part(i), q.part(i));
  }
  return Partition(std::move(parts));
}

PartitionStats stats(const Partition& p) {
  PartitionStats st;
  const Partition cols = transpose(p);
  st.s.assign(cols.parts().begin(), cols.parts().end());
  const auto m = static_cast<std::size_t>(p.largest());
  st.r.assign(m, 0);
  for (int x : p.parts()) ++st.r[static_cast<std::size_t>(x - 1)];
  return st;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    out.emplace_back(parts);
  });
  return out;
}

}  // namespace orbitcalc
