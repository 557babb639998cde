#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orbitcalc/closure_poset.hpp"

using namespace orbitcalc;

namespace {

bool has_edge(const ClosurePoset& p, std::size_t a, std::size_t b) {
  return std::find(p.edges.begin(), p.edges.end(), std::make_pair(a, b)) != p.edges.end();
}

}  // namespace

TEST_CASE("C2 diagram") {
  const auto p = build_closure_poset(make_group(Family::C, 2));
  REQUIRE(p.nodes.size() == 4);
  CHECK(p.edges.size() == 3);
  CHECK(p.nodes[0].partition == Partition{4});
  CHECK(has_edge(p, 3, 2));
  CHECK(has_edge(p, 2, 1));
  CHECK(has_edge(p, 1, 0));
}

TEST_CASE("B2 special flags") {
  const auto p = build_closure_poset(make_group(Family::B, 2));
  REQUIRE(p.nodes.size() == 4);
  for (const auto& n : p.nodes) {
    CHECK(n.special == (n.partition != Partition{2, 2, 1}));
  }
}

TEST_CASE("D2 very even pair") {
  const auto p = build_closure_poset(make_group(Family::D, 2));
  REQUIRE(p.nodes.size() == 4);
  CHECK(p.nodes[1].partition == Partition{2, 2});
  CHECK(p.nodes[2].partition == Partition{2, 2});
  CHECK(p.nodes[1].label == VeryEvenLabel::I);
  CHECK(p.nodes[2].label == VeryEvenLabel::II);
  CHECK(p.nodes[1].dim == p.nodes[2].dim);
  CHECK_FALSE(has_edge(p, 1, 2));
  CHECK_FALSE(has_edge(p, 2, 1));
  CHECK(p.edges.size() == 4);
  const std::string dot = to_dot(p);
  CHECK(dot.find("[2,2] II") != std::string::npos);
  CHECK(dot.find("n3 -> n1") != std::string::npos);
}

TEST_CASE("covering edges against a brute-force check") {
  for (const auto& g : {make_group(Family::B, 4), make_group(Family::C, 5),
                        make_group(Family::D, 5)}) {
    const auto p = build_closure_poset(g);
    const auto all = enumerate_type_partitions(g);
    std::size_t expected = 0;
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (!dominance_less(a, b)) continue;
        const bool between = std::any_of(all.begin(), all.end(), [&](const Partition& c) {
          return dominance_less(a, c) && dominance_less(c, b);
        });
        if (!between) ++expected;
      }
    }
    CHECK(p.edges.size() == expected);
    for (const auto& [lo, hi] : p.edges) {
      CHECK(dominance_less(p.nodes[lo].partition, p.nodes[hi].partition));
    }
    // Unique top and bottom.
    std::vector<int> in(p.nodes.size(), 0), out(p.nodes.size(), 0);
    for (const auto& [lo, hi] : p.edges) {
      ++out[lo];
      ++in[hi];
    }
    CHECK(std::count(out.begin(), out.end(), 0) == 1);
    CHECK(std::count(in.begin(), in.end(), 0) == 1);
  }
}

TEST_CASE("JSON export") {
  const auto p = build_closure_poset(make_group(Family::C, 2), true);
  const auto j = to_json(p);
  CHECK(j.at("nodes").size() == 4);
  CHECK(j.at("edges").size() == 3);
  CHECK(j.at("nodes")[0].at("eta") == nlohmann::json::parse("[1,1,1,1,1]"));
  CHECK(j.at("eta_group").at("family") == "B");
}
