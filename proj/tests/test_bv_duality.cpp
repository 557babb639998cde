#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitcalc/bv_duality.hpp"

using namespace orbitcalc;

namespace {

const GroupType B(int n) { return make_group(Family::B, n); }
const GroupType C(int n) { return make_group(Family::C, n); }
const GroupType D(int n) { return make_group(Family::D, n); }

std::vector<GroupType> sources_of_size(int size) {
  if (size % 2) return {B(size / 2)};
  return {C(size / 2), D(size / 2)};
}

}  // namespace

TEST_CASE("eta examples") {
  CHECK(eta(Partition{3, 3, 3, 2, 2}, B(6)) == Partition{5, 5, 2});
  CHECK(eta(Partition{2, 2, 1, 1, 1}, B(3)) == Partition{4, 2});
  CHECK(eta(Partition{2, 2, 2, 1, 1}, C(4)) == Partition{5, 3, 1});
  CHECK(eta(Partition{1, 1, 1, 1, 1}, B(2)) == Partition{4});
  CHECK(eta(Partition{3, 3, 2, 2, 2}, C(6)) == Partition{5, 5, 3});
  CHECK(eta(Partition{3, 3, 3, 2, 2, 1}, D(7)) == Partition{5, 5, 3, 1});
}

TEST_CASE("eta_alt examples") {
  CHECK(eta_alt(Partition{3, 3, 3, 2, 2}, B(6)) == Partition{5, 5, 2});
  CHECK(eta_alt(Partition{1, 1, 1, 1, 1}, B(2)) == Partition{4});
  CHECK(eta_alt(Partition{2, 2, 2, 1, 1}, C(4)) == Partition{5, 3, 1});
}

TEST_CASE("eta rejects the wrong case") {
  CHECK_THROWS_AS(eta(Partition{3, 1}, C(2)), Error);
  CHECK_THROWS_AS(eta(Partition{2, 2, 1}, C(2)), Error);
  try {
    eta(Partition{2, 1, 1, 1}, B(2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTypeMismatch);
    CHECK(std::string(e.what()).find("odd orthogonal case") != std::string::npos);
  }
}

TEST_CASE("group_for_size") {
  CHECK(group_for_size(Family::B, 9) == B(4));
  CHECK(group_for_size(Family::C, 8) == C(4));
  CHECK_THROWS_AS(group_for_size(Family::D, 7), Error);
  CHECK_THROWS_AS(group_for_size(Family::B, 8), Error);
}

TEST_CASE("both routes agree and land on target partitions (size <= 17)") {
  for (int size = 0; size <= 17; ++size) {
    for (const auto& s : sources_of_size(size)) {
      for (const auto& p : enumerate_type_partitions(s)) {
        const Partition e = eta(p, s);
        INFO(s.name() << " " << to_string(p));
        REQUIRE(e == eta_alt(p, s));
        REQUIRE(is_type(e, eta_target(s)));
      }
    }
  }
}

TEST_CASE("collapse of the transpose is special (size <= 16)") {
  for (int size = 0; size <= 16; ++size) {
    for (const auto& s : sources_of_size(size)) {
      for (const auto& p : enumerate_type_partitions(s)) {
        REQUIRE(is_special(collapse(transpose(p), s), s));
      }
    }
  }
}

TEST_CASE("eta outputs are special (size <= 16)") {
  for (int size = 0; size <= 16; ++size) {
    for (const auto& s : sources_of_size(size)) {
      for (const auto& p : enumerate_type_partitions(s)) {
        REQUIRE(is_special(eta(p, s), eta_target(s)));
      }
    }
  }
}

TEST_CASE("eta reverses dominance (size <= 14)") {
  for (int size = 0; size <= 14; ++size) {
    for (const auto& s : sources_of_size(size)) {
      const auto all = enumerate_type_partitions(s);
      for (const auto& p : all) {
        for (const auto& q : all) {
          if (dominance_leq(p, q)) REQUIRE(dominance_leq(eta(q, s), eta(p, s)));
        }
      }
    }
  }
}

TEST_CASE("D collapse of the transpose through the plus-minus route") {
  CHECK(achar_identity_check(Partition{2, 2}));
  CHECK(achar_identity_check(Partition{3, 3, 1, 1}));
  CHECK(achar_identity_check(Partition{4, 4, 2, 2}));
  CHECK(achar_identity_check(Partition{}));
  CHECK_THROWS_AS(achar_identity_check(Partition{2, 1}), Error);
  // [4,2] is not orthogonal and its transpose [2,2,1,1] is symplectic.
  CHECK_NOTHROW(achar_identity_check(Partition{4, 2}));
  // [3,1,1,1]^t = [4,1,1] is not symplectic, [3,1,1,1] is orthogonal.
  CHECK(achar_identity_check(Partition{3, 1, 1, 1}));
  CHECK_THROWS_AS(achar_identity_check(Partition{4, 1, 1}), Error);

  for (int size = 0; size <= 16; size += 2) {
    for (const auto& p : enumerate_partitions(size)) {
      if (is_orthogonal(p) || is_symplectic(transpose(p))) {
        REQUIRE_MESSAGE(achar_identity_check(p), to_string(p));
      }
    }
  }
}
