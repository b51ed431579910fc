#include <doctest.h>

#include "pcoh/report.hpp"

using namespace pcoh;

TEST_CASE("polyvector JSON") {
  CHECK(to_json(Polyvector(parse_poly("x*y"))) == Json("x*y"));
  CHECK(to_json(Polyvector(VectorField{Poly::x(), 0})) == Json{{"dx", "x"}, {"dy", "0"}});
  CHECK(to_json(Polyvector(Bivector{Poly(2)})) == Json{{"dxdy", "2"}});
}

TEST_CASE("class JSON") {
  auto P = instantiate(parse_type("A3+", Rational(1)));
  auto n = normalize_hp2_traced(Bivector{parse_poly("-2*y^3 + 5*y^2")}, P);
  Json j = to_json(n, P);
  CHECK(j["class"]["lambda"] == Json::parse(R"([{"monomial": "y^2", "coeff": "5"}])"));
  CHECK(j["class"]["q"] == Json::parse(R"([{"e": "y", "coeff": "-3"}])"));
  CHECK(j["element"] == "5*w3 - 3*t1");
  REQUIRE(j["trace"].size() == 2);
  CHECK(j["trace"][1]["k"] == 1);
  CHECK(j["trace"][1]["chain"][0] == Json{{"dx", "0"}, {"dy", "-1/2"}});
  CHECK(j["trace"][0]["k"] == 2);  // deg y^2 = d - 2s
  HP1Class c{2, {Rational(-1, 3)}};
  CHECK(to_json(c, P) == Json::parse(R"({"alpha": "2", "beta": [{"e": "y", "coeff": "-1/3"}]})"));
}

TEST_CASE("table JSON") {
  auto P = instantiate(parse_type("E7", Rational(0)));
  auto t = gerstenhaber_table(P, P.default_jet_order());
  Json j = to_json(t, P, true, true);
  bool found = false;
  for (const auto& e : j["wedge"])
    if (e["left"] == "u" && e["right"] == "v1") {
      CHECK(e["result"] == Json::parse(R"({"t": [["e1", "9"]]})"));
      found = true;
    }
  CHECK(found);
  for (const auto& e : j["bracket"])
    if (e["left"] == "v1" && e["right"] == "w1") CHECK(e["result"] == Json::parse(R"({"w": [["w4", "-9"]]})"));
  CHECK(table_text(t, P, false, true).find("[v1, w2] = -7*w6") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  auto t = parse_type("D4+", Rational(1), Rational(1, 2));
  auto a = to_json(verify(t)).dump();
  auto b = to_json(verify(t)).dump();
  CHECK(a == b);
  Json j = Json::parse(a);
  CHECK(j.contains("dims"));
  CHECK(j.contains("raw_brackets"));
  CHECK(j.contains("presentation"));
  for (const auto& e : j["raw_brackets"]) {
    CHECK(e.contains("expected"));
    CHECK(e.contains("computed"));
    CHECK(e.contains("note"));
    std::string s = e["status"];
    CHECK((s == "pass" || s == "fail" || s == "known-discrepancy"));
  }
  auto P = instantiate(parse_type("E6"));
  auto d = to_json(graded_dims(P, 24));
  CHECK(d["totals"] == Json::parse("[1, 1, 6]"));
  CHECK(d["mode"] == "graded");
  CHECK(structure_json(P)["dims"] == Json::parse("[1, 1, 6, 0]"));
}
