#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitcalc {

/// Failure categories raised by the library. The CLI maps every one of them
/// to an input error.
enum class ErrorCode {
  kMalformedPartition,
  kSizeMismatch,
  kTypeMismatch,
  kEmptyPartition,
  kOverflow,
  kNoExtremum,
  kAmbiguousExtremum,
  kInvalidParameter,
  kParse,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A multiplicity-tagged part, written b^a in exponent notation.
struct PartPower {
  int part = 0;
  int multiplicity = 0;
};

/// Integer partition stored canonically: strictly positive parts in weakly
/// decreasing order. The empty partition is the partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws kMalformedPartition unless `parts` is already canonical.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zero parts. Negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  /// Builds [b_1^{a_1} b_2^{a_2} ...]; powers may come in any order and
  /// repeated parts accumulate.
  static Partition from_powers(std::span<const PartPower> powers);

  /// [n]
  static Partition row(int n);
  /// [1^n]
  static Partition column(int n);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }

  /// i-th part (0-based); zero past the end.
  int part(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }
  int largest() const noexcept { return part(0); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
  int multiplicity(int value) const noexcept;

  /// Distinct parts with multiplicities, largest part first.
  std::vector<PartPower> powers() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  /// Lexicographic order on the part sequence; a total order used for
  /// containers, unrelated to dominance.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "[3,3,2,2,2]"
std::string to_string(const Partition& p);

struct PartitionStats {
  /// s[i-1] = #{j : p_j >= i} for i = 1..p_1
  std::vector<int> s;
  /// r[i-1] = #{j : p_j == i} for i = 1..p_1
  std::vector<int> r;
};

Partition transpose(const Partition& p);

/// Dominance order. Partitions of different sizes live in different posets,
/// so comparing them throws kSizeMismatch rather than returning false.
bool dominance_leq(const Partition& p, const Partition& q);
/// p <= q and p != q.
bool dominance_less(const Partition& p, const Partition& q);
/// Neither p <= q nor q <= p (same size required).
bool incomparable(const Partition& p, const Partition& q);

// The four boundary operations. dec_* throw kEmptyPartition on [].
Partition dec_min(const Partition& p);     // p^-
Partition inc_max(const Partition& p);     // p^+
Partition dec_max(const Partition& p);     // p_-
Partition append_one(const Partition& p);  // p_+
/// (p^+)^-: grow the largest part, then shrink the smallest.
Partition plus_minus(const Partition& p);

/// Multiset union of parts.
Partition union_parts(const Partition& p, const Partition& q);
/// Part-by-part sum, shorter partition padded with zeros.
Partition pointwise_sum(const Partition& p, const Partition& q);

PartitionStats stats(const Partition& p);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int n);

/// Visits partitions of n in lexicographically decreasing order without
/// materialising the list. The visitor receives the canonical part vector.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit);

namespace detail {
int checked_add(int a, int b);
int checked_mul(int a, int b);

template <typename Visitor>
void partitions_rec(int remaining, int cap, std::vector<int>& prefix,
                    Visitor& visit) {
  if (remaining == 0) {
    visit(static_cast<const std::vector<int>&>(prefix));
    return;
  }
  for (int k = remaining < cap ? remaining : cap; k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, visit);
    prefix.pop_back();
  }
}
}  // namespace detail

template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  if (n < 0) return;
  std::vector<int> prefix;
  detail::partitions_rec(n, n, prefix, visit);
}

}  // namespace orbitcalc
