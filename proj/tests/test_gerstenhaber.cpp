#include <doctest.h>

#include <map>

#include "pcoh/arnold.hpp"
#include "pcoh/gerstenhaber.hpp"

using namespace pcoh;

namespace {

// Nonzero entries as "left,right" -> rendered value.
std::map<std::string, std::string> nonzero(const std::vector<TableEntry>& es, const GerstenhaberTable& t,
                                           const PoissonStructure& P, bool skip_unit) {
  std::map<std::string, std::string> out;
  for (const auto& e : es) {
    const auto& l = t.basis.elements[e.left].name;
    const auto& r = t.basis.elements[e.right].name;
    if (skip_unit && (l == "1" || r == "1")) continue;
    if (!e.result.is_zero()) out[l + "," + r] = render(e.result, P);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical basis") {
  auto P = instantiate(parse_type("D4+"));
  auto cb = canonical_basis(P);
  std::vector<std::string> names;
  for (const auto& e : cb.elements) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"1", "u", "v1", "v2", "w1", "w2", "w3", "w4", "t1", "t2"});
  CHECK(cb.index("w3") == 6);
  CHECK(cb.element(P, cb.index("t2")).coords == std::vector<Rational>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("E7 tables") {
  for (Rational l : {Rational(0), Rational(1), Rational(1, 2)}) {
    auto P = instantiate(parse_type("E7", l));
    auto t = gerstenhaber_table(P, P.default_jet_order());
    auto br = nonzero(t.bracket, t, P, false);
    std::string c13 = l == 1 ? "13" : "13/2";
    std::map<std::string, std::string> expect{{"v1,w2", "-7*w6"}, {"v1,w4", "-5*w7"},
                                              {"w2,v1", "7*w6"},   {"w4,v1", "5*w7"}};
    expect["v1,w1"] = l == 0 ? "-9*w4" : "-9*w4 - " + c13 + "*w7";
    expect["w1,v1"] = l == 0 ? "9*w4" : "9*w4 + " + c13 + "*w7";
    CAPTURE(to_string(l));
    CHECK(br == expect);
    auto we = nonzero(t.wedge, t, P, true);
    CHECK(we == std::map<std::string, std::string>{{"u,v1", "9*t1"}, {"v1,u", "-9*t1"}});
    CHECK(leibniz_check(P, t).ok());
    CHECK(presentation_check(P, t).ok());
  }
}

TEST_CASE("wedge table with d = 3") {
  auto P = instantiate(parse_type("D4+", Rational(0), Rational(0)));
  auto t = wedge_table(P, P.default_jet_order());
  auto we = nonzero(t.wedge, t, P, true);
  CHECK(we == std::map<std::string, std::string>{
                  {"u,v1", "3*t1"}, {"u,v2", "3*t2"}, {"v1,u", "-3*t1"}, {"v2,u", "-3*t2"}});
  CHECK(t.bracket.empty());
}

TEST_CASE("E6 and E8 have no brackets") {
  for (const char* sel : {"E6", "E8"}) {
    auto P = instantiate(parse_type(sel));
    auto t = bracket_table(P, P.default_jet_order());
    CHECK(nonzero(t.bracket, t, P, true).empty());
    auto pr = presentation(P);
    std::string text = "K[u]/(u^2)";
    for (std::size_t i = 1; i <= P.c(); ++i) text += " x_K K[w" + std::to_string(i) + "]/(w" + std::to_string(i) + "^2)";
    CHECK(pr.text == text);
  }
}

TEST_CASE("bilinear extension") {
  auto P = instantiate(parse_type("E7", Rational(1)));
  auto t = gerstenhaber_table(P, P.default_jet_order());
  HPElement a = zero_element(P, 1), b = zero_element(P, 2);
  a.coords = {2, 3};           // 2u + 3v1
  b.coords[0] = 1;             // w1 - w2
  b.coords[1] = -1;
  // 3([v1, w1] - [v1, w2]) = 3(-9w4 - 13w7 + 7w6)
  CHECK(render(t.bracket_of(P, a, b), P) == "-27*w4 + 21*w6 - 39*w7");
  CHECK(render(t.wedge_of(P, a, a), P) == "0");
  HPElement v = zero_element(P, 1);
  v.coords = {0, 1};
  CHECK(render(t.wedge_of(P, a, v), P) == "18*t1");
  CHECK(t.wedge_of(P, b, b).is_zero());
}

TEST_CASE("presentations") {
  CHECK(presentation(1, 2, 4).text == "K<u, v1>/(u^2, v1^2, u*v1+v1*u) x_K K[w1]/(w1^2) x_K K[w2]/(w2^2)");
  CHECK(presentation(0, 1, 4).text == "K[u]/(u^2) x_K K[w1]/(w1^2)");
  auto P = instantiate(parse_type("A3+", Rational(1)));
  auto pr = presentation(P);
  CHECK(pr.identifications == std::vector<std::string>{"t1 = (1/4)*u*v1"});
}
