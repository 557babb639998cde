#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitcalc/json_io.hpp"
#include "orbitcalc/text_format.hpp"

using namespace orbitcalc;
using nlohmann::json;

TEST_CASE("partition syntax") {
  CHECK(parse_partition("[3,3,2,2,2]") == Partition{3, 3, 2, 2, 2});
  CHECK(parse_partition("[3^2 2^3]") == Partition{3, 3, 2, 2, 2});
  CHECK(parse_partition(" [ 3 ^ 2 , 2^3 ] ") == Partition{3, 3, 2, 2, 2});
  CHECK(parse_partition("[3 3 2^3]") == Partition{3, 3, 2, 2, 2});
  CHECK(parse_partition("[]") == Partition{});
  CHECK(parse_partition("[1^5]") == Partition::column(5));
}

TEST_CASE("partition syntax errors name the token") {
  const auto message = [](const char* text) {
    try {
      parse_partition(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("[2,3]").find("'3'") != std::string::npos);
  CHECK(message("[2,x]").find("'x'") != std::string::npos);
  CHECK(message("[2,0]").find("'0'") != std::string::npos);
  CHECK(message("[2^0]").find("'2^0'") != std::string::npos);
  CHECK(message("3,2").find("enclosed") != std::string::npos);
  CHECK(message("[99999999999]").find("out of range") != std::string::npos);
}

TEST_CASE("group and parameter syntax") {
  CHECK(parse_group("C5") == make_group(Family::C, 5));
  CHECK(parse_group("b2") == make_group(Family::B, 2));
  CHECK(parse_group("D0") == make_group(Family::D, 0));
  CHECK_THROWS_AS(parse_group("E6"), Error);
  CHECK_THROWS_AS(parse_group("C"), Error);
  CHECK_THROWS_AS(parse_group("C-1"), Error);

  const auto psi = parse_parameter("C6:{3^3,2^2}");
  CHECK(psi.p_psi() == Partition{3, 3, 3, 2, 2});
  CHECK(parse_parameter("C6:{2^2, 3^3}") == psi);
  CHECK(parse_parameter("C6:{3^1,2^2,3^2}") == psi);
  CHECK(parse_parameter("C6:[3^3 2^2]") == psi);
  CHECK(parse_parameter(to_string(psi)) == psi);
  CHECK_THROWS_AS(parse_parameter("C6{3^3,2^2}"), Error);
  CHECK_THROWS_AS(parse_parameter("C2:{3,2}"), Error);
}

TEST_CASE("eta source names") {
  CHECK(parse_source_family("soOdd") == Family::B);
  CHECK(parse_source_family("sp") == Family::C);
  CHECK(parse_source_family("soEven") == Family::D);
  CHECK(parse_source_family("c") == Family::C);
  CHECK_THROWS_AS(parse_source_family("gl"), Error);
}

TEST_CASE("JSON round trips") {
  const Partition p{3, 3, 2};
  const json jp = p;
  CHECK(jp.dump() == "[3,3,2]");
  CHECK(jp.get<Partition>() == p);
  CHECK(json(Partition{}).dump() == "[]");
  CHECK_THROWS_AS(json::parse("[2,3]").get<Partition>(), Error);
  CHECK_THROWS_AS(json::parse("{\"a\":1}").get<Partition>(), Error);

  const GroupType g = make_group(Family::C, 5);
  const json jg = g;
  CHECK(jg.dump() == R"({"family":"C","rank":5})");
  CHECK(jg.get<GroupType>() == g);

  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& psi : enumerate_parameters(make_group(f, n))) {
        const json j = json::parse(parameter_json(psi).dump());
        REQUIRE(parameter_from_json(j) == psi);
        REQUIRE(parse_parameter(j.at("text").get<std::string>()) == psi);
      }
    }
  }
}

TEST_CASE("criterion JSON fields") {
  const auto psi = parse_parameter("C6:{3^3,2^2}");
  const json j = criterion_json(check_expansion_form(psi));
  CHECK(j.at("lhs") == json::parse("[5,5,2]"));
  CHECK(j.at("rhs") == json::parse("[5,5,2]"));
  CHECK(j.at("verdict") == true);
  CHECK(j.at("class") == "none");
}
