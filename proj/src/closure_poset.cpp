#include "orbitcalc/closure_poset.hpp"

#include <cstdint>
#include <sstream>

#include "orbitcalc/bv_duality.hpp"
#include "orbitcalc/dimensions.hpp"
#include "orbitcalc/json_io.hpp"

namespace orbitcalc {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool get_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

}  // namespace

std::string node_name(const PosetNode& node) {
  std::string s = to_string(node.partition);
  if (node.label) s += *node.label == VeryEvenLabel::I ? " I" : " II";
  return s;
}

ClosurePoset build_closure_poset(const GroupType& group, bool with_eta) {
  ClosurePoset poset{group, {}, {}};
  const auto parts = enumerate_type_partitions(group);
  const std::size_t m = parts.size();

  // Strict up-sets between distinct partitions, then drop everything
  // reachable in two steps.
  const std::size_t words = (m + 63) / 64;
  std::vector<Bits> up(m, Bits(words, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && dominance_leq(parts[i], parts[j])) set_bit(up[i], j);
    }
  }
  std::vector<std::vector<std::size_t>> covers(m);
  for (std::size_t i = 0; i < m; ++i) {
    Bits far(words, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (!get_bit(up[i], j)) continue;
      for (std::size_t w = 0; w < words; ++w) far[w] |= up[j][w];
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (get_bit(up[i], j) && !get_bit(far, j)) covers[i].push_back(j);
    }
  }

  std::vector<std::vector<std::size_t>> ids(m);
  for (std::size_t i = 0; i < m; ++i) {
    PosetNode base;
    base.partition = parts[i];
    base.dim = dim_orbit(parts[i], group);
    base.special = is_special(parts[i], group);
    if (with_eta) base.eta = eta(parts[i], group);
    if (is_very_even(parts[i], group)) {
      for (auto label : {VeryEvenLabel::I, VeryEvenLabel::II}) {
        PosetNode node = base;
        node.label = label;
        ids[i].push_back(poset.nodes.size());
        poset.nodes.push_back(std::move(node));
      }
    } else {
      ids[i].push_back(poset.nodes.size());
      poset.nodes.push_back(std::move(base));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : covers[i]) {
      for (std::size_t a : ids[i]) {
        for (std::size_t b : ids[j]) poset.edges.emplace_back(a, b);
      }
    }
  }
  return poset;
}

std::string to_dot(const ClosurePoset& poset) {
  std::ostringstream out;
  out << "digraph \"" << poset.group.name() << "\" {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const auto& n = poset.nodes[i];
    out << "  n" << i << " [label=\"" << node_name(n) << "\\ndim " << n.dim;
    if (n.eta) out << "\\neta " << to_string(*n.eta);
    out << "\"";
    if (n.special) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [a, b] : poset.edges) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const ClosurePoset& poset) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const auto& n = poset.nodes[i];
    nlohmann::json j{{"id", i},
                     {"partition", n.partition},
                     {"dim", n.dim},
                     {"special", n.special}};
    if (n.label) j["label"] = *n.label == VeryEvenLabel::I ? "I" : "II";
    if (n.eta) j["eta"] = *n.eta;
    nodes.push_back(std::move(j));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : poset.edges) edges.push_back({a, b});
  return {{"group", poset.group},
          {"eta_group", poset.group.dual()},
          {"nodes", nodes},
          {"edges", edges}};
}

}  // namespace orbitcalc
