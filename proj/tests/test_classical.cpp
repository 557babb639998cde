#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <optional>
#include <set>

#include "orbitcalc/classical.hpp"

using namespace orbitcalc;

namespace {

const GroupType B(int n) { return make_group(Family::B, n); }
const GroupType C(int n) { return make_group(Family::C, n); }
const GroupType D(int n) { return make_group(Family::D, n); }

std::vector<GroupType> groups_for(int size) {
  if (size % 2) return {B(size / 2)};
  return {C(size / 2), D(size / 2)};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("group conventions") {
  CHECK(B(2).partition_size() == 5);
  CHECK(C(2).partition_size() == 4);
  CHECK(D(2).partition_size() == 4);
  CHECK(B(3).dual() == C(3));
  CHECK(C(3).dual() == B(3));
  CHECK(D(3).dual() == D(3));
  CHECK(C(5).name() == "C5");
  CHECK_THROWS_AS(make_group(Family::C, -1), Error);
}

TEST_CASE("type predicates") {
  CHECK(is_orthogonal(Partition{3, 3, 2, 2, 1}));
  CHECK(is_symplectic(Partition{2, 2, 1, 1}));
  CHECK_FALSE(is_symplectic(Partition{3, 1}));
  CHECK(is_type(Partition{2, 2, 1}, B(2)));
  CHECK(is_type(Partition{2, 1, 1}, C(2)));
  CHECK_FALSE(is_type(Partition{3, 2}, D(2)));
  CHECK(is_type(Partition{}, C(0)));
  CHECK(is_type(Partition{}, D(0)));
  CHECK(is_type(Partition{1}, B(0)));
  CHECK(is_very_even(Partition{2, 2}, D(2)));
  CHECK_FALSE(is_very_even(Partition{2, 2}, C(2)));
  CHECK_FALSE(is_very_even(Partition{}, D(0)));
}

TEST_CASE("orbit labels") {
  CHECK_NOTHROW(make_orbit(Partition{2, 2}, D(2), VeryEvenLabel::I));
  CHECK_THROWS_AS(make_orbit(Partition{2, 2}, D(2)), Error);
  CHECK_THROWS_AS(make_orbit(Partition{3, 1}, D(2), VeryEvenLabel::II), Error);
  CHECK_THROWS_AS(make_orbit(Partition{3, 1}, C(2)), Error);
}

TEST_CASE("collapse examples") {
  CHECK(collapse(Partition{3, 3, 3, 2, 1}, C(6)) == Partition{3, 3, 2, 2, 2});
  CHECK(collapse(Partition{2, 2, 1, 1}, C(3)) == Partition{2, 2, 1, 1});
  CHECK(collapse(Partition{3, 2, 2, 1, 1}, B(4)) == Partition{3, 2, 2, 1, 1});
  CHECK(collapse(Partition{4}, D(2)) == Partition{3, 1});
}

TEST_CASE("collapse size mismatch") {
  CHECK(code_of([] { collapse(Partition{3, 2}, C(3)); }) == ErrorCode::kSizeMismatch);
  CHECK(code_of([] { collapse(Partition{3, 2}, D(2)); }) == ErrorCode::kSizeMismatch);
}

TEST_CASE("collapse agrees with the brute-force maximum") {
  for (int size = 0; size <= 16; ++size) {
    for (const auto& g : groups_for(size)) {
      for (const auto& p : enumerate_partitions(size)) {
        const Partition c = collapse(p, g);
        REQUIRE_MESSAGE(c == collapse_oracle(p, g), g.name() << " " << to_string(p));
        REQUIRE(is_type(c, g));
        REQUIRE(collapse(c, g) == c);
      }
    }
  }
}

TEST_CASE("collapse is monotone") {
  for (int size = 0; size <= 12; ++size) {
    for (const auto& g : groups_for(size)) {
      const auto all = enumerate_partitions(size);
      std::vector<Partition> images;
      for (const auto& p : all) images.push_back(collapse(p, g));
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (dominance_leq(all[i], all[j])) {
            REQUIRE(dominance_leq(images[i], images[j]));
          }
        }
      }
    }
  }
}

TEST_CASE("expansion examples") {
  CHECK(expansion(Partition{3, 3, 3}, B(4)) == Partition{3, 3, 3});
  CHECK(expansion(Partition{2, 2, 1}, B(2)) == Partition{3, 1, 1});
  CHECK(expansion(Partition{5}, B(2)) == Partition{5});
  CHECK(expansion(Partition{2, 2, 2}, C(3)) == Partition{2, 2, 2});
}

TEST_CASE("expansion of non-type input can be undefined") {
  // Nothing of type D(1) lies above [2].
  CHECK(code_of([] { expansion(Partition{2}, D(1)); }) == ErrorCode::kNoExtremum);
  CHECK(code_of([] { expansion_oracle(Partition{2}, D(1)); }) == ErrorCode::kNoExtremum);
  // [5,1,1,1] and [4,4] are both minimal specials above [4,2,1,1].
  CHECK(code_of([] { expansion(Partition{4, 2, 1, 1}, D(4)); }) ==
        ErrorCode::kAmbiguousExtremum);
  CHECK(code_of([] { expansion_oracle(Partition{4, 2, 1, 1}, D(4)); }) ==
        ErrorCode::kAmbiguousExtremum);
}

TEST_CASE("expansion agrees with the brute-force minimum, errors included") {
  for (int size = 0; size <= 14; ++size) {
    for (const auto& g : groups_for(size)) {
      for (const auto& p : enumerate_partitions(size)) {
        std::optional<Partition> fast;
        std::optional<Partition> slow;
        ErrorCode fe{};
        ErrorCode se{};
        try {
          fast = expansion(p, g);
        } catch (const Error& e) {
          fe = e.code();
        }
        try {
          slow = expansion_oracle(p, g);
        } catch (const Error& e) {
          se = e.code();
        }
        INFO(g.name() << " " << to_string(p));
        REQUIRE(fast == slow);
        if (!fast) REQUIRE(fe == se);
        if (fast) {
          REQUIRE(is_special(*fast, g));
          REQUIRE(dominance_leq(p, *fast));
        }
        // For type input the expansion always exists.
        if (is_type(p, g)) REQUIRE(fast.has_value());
      }
    }
  }
}

TEST_CASE("spaltenstein dual and specialness examples") {
  CHECK(spaltenstein_dual(Partition{2, 1, 1}, C(2)) == Partition{2, 2});
  CHECK(spaltenstein_dual(Partition{2, 2}, C(2)) == Partition{2, 2});
  CHECK(spaltenstein_dual(Partition{1, 1, 1, 1, 1}, B(2)) == Partition{5});
  CHECK_FALSE(is_special(Partition{2, 1, 1}, C(2)));
  CHECK(is_special(Partition{5}, B(2)));
  CHECK_FALSE(is_special(Partition{2, 2, 1}, B(2)));
  CHECK_THROWS_AS(spaltenstein_dual(Partition{3, 1}, C(2)), Error);
  CHECK(is_special(Partition{}, C(0)));
}

TEST_CASE("special means in the image of d, and the transpose characterisation") {
  for (int size = 0; size <= 15; ++size) {
    for (const auto& g : groups_for(size)) {
      const auto all = enumerate_type_partitions(g);
      std::set<Partition> image;
      for (const auto& p : all) {
        const Partition d = spaltenstein_dual(p, g);
        REQUIRE(is_type(d, g));
        image.insert(d);
      }
      for (const auto& p : all) {
        const bool special = is_special(p, g);
        REQUIRE(special == image.contains(p));
        const Partition t = transpose(p);
        const bool by_t = g.family == Family::B ? is_orthogonal(t) : is_symplectic(t);
        REQUIRE_MESSAGE(special == by_t, g.name() << " " << to_string(p));
      }
      // d reverses the order.
      for (const auto& p : all) {
        for (const auto& q : all) {
          if (dominance_leq(p, q)) {
            REQUIRE(dominance_leq(spaltenstein_dual(q, g), spaltenstein_dual(p, g)));
          }
        }
      }
    }
  }
}

TEST_CASE("enumerate_type_partitions examples") {
  CHECK(enumerate_type_partitions(C(2)) ==
        std::vector<Partition>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_type_partitions(B(2)) ==
        std::vector<Partition>{{5}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}});
  CHECK(enumerate_type_partitions(C(0)) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_type_partitions(D(1)) == std::vector<Partition>{{1, 1}});
}
