#include "orbitcalc/json_io.hpp"

namespace orbitcalc {

using nlohmann::json;

void to_json(json& j, const Partition& p) {
  j = json::array();
  for (int x : p.parts()) j.push_back(x);
}

void from_json(const json& j, Partition& p) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParse, "partition JSON must be an array: " + j.dump());
  }
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::kParse, "partition entry not an integer: " + x.dump());
    }
    parts.push_back(x.get<int>());
  }
  p = Partition(std::move(parts));
}

void to_json(json& j, const GroupType& g) {
  j = json{{"family", std::string(1, family_letter(g.family))}, {"rank", g.rank}};
}

void from_json(const json& j, GroupType& g) {
  const auto f = j.at("family").get<std::string>();
  Family family{};
  if (f == "B") family = Family::B;
  else if (f == "C") family = Family::C;
  else if (f == "D") family = Family::D;
  else throw Error(ErrorCode::kParse, "unknown family '" + f + "'");
  g = make_group(family, j.at("rank").get<int>());
}

json parameter_json(const ArthurPartitionData& psi) {
  json factors = json::array();
  for (const auto& f : psi.factors()) factors.push_back({{"a", f.a}, {"b", f.b}});
  return {{"group", psi.group()},
          {"p_psi", psi.p_psi()},
          {"factors", factors},
          {"text", to_string(psi)}};
}

ArthurPartitionData parameter_from_json(const json& j) {
  return ArthurPartitionData::from_partition(j.at("group").get<GroupType>(),
                                             j.at("p_psi").get<Partition>());
}

json criterion_json(const CriterionResult& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"verdict", r.verdict},
          {"class", to_string(r.tag)}};
}

json dominance_json(const DominanceCheck& d) {
  return {{"constructed", d.constructed},
          {"eta", d.eta},
          {"holds", d.holds},
          {"strict", d.strict},
          {"asserted", d.asserted}};
}

json item_json(const VerificationItem& item) {
  json terms = json::array();
  for (const auto& t : item.terms) {
    terms.push_back({{"label", t.label},
                     {"group", t.group},
                     {"partition", t.partition},
                     {"group_dim", t.group_dim},
                     {"orbit_dim", t.orbit_dim}});
  }
  return {{"lhs", item.lhs},
          {"rhs", item.rhs},
          {"rhs_dual", item.rhs_dual},
          {"holds", item.holds},
          {"terms", terms}};
}

}  // namespace orbitcalc
