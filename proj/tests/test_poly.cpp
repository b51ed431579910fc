#include <doctest.h>

#include "pcoh/errors.hpp"
#include "pcoh/poly.hpp"
#include "support.hpp"

using namespace pcoh;

TEST_CASE("rationals parse in p/q form") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational(" 5 ") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("a"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK(ratio(1, -2) == Rational(-1, 2));
  CHECK(ratio(-4, -6) == Rational(2, 3));
  CHECK_THROWS_AS(ratio(1, 0), InputError);
}

TEST_CASE("parse and render") {
  Poly p = parse_poly("x^3 + x*y^3");
  CHECK(p.coeff({3, 0}) == 1);
  CHECK(p.coeff({1, 3}) == 1);
  CHECK(p.size() == 2);
  CHECK(parse_poly(render(p)) == p);
  CHECK(parse_poly("2*(x+y)^2 - 4*x*y") == parse_poly("2*x^2 + 2*y^2"));
  CHECK(parse_poly("-1/2*y") == Poly::monomial({0, 1}, Rational(-1, 2)));
  CHECK(parse_poly("0").is_zero());
  CHECK(render(Poly()) == "0");
  CHECK(render(Monomial{0, 0}) == "1");
  CHECK(render(Monomial{2, 1}) == "x^2*y");
  CHECK_THROWS_AS(parse_poly("x^"), InputError);
  CHECK_THROWS_AS(parse_poly("x + z"), InputError);
  CHECK_THROWS_AS(parse_poly("(x"), InputError);
  CHECK_THROWS_AS(parse_poly("x/0"), InputError);
}

TEST_CASE("arithmetic never stores zeros") {
  Poly x = Poly::x(), y = Poly::y();
  Poly p = x + y;
  Poly q = p - x - y;
  CHECK(q.is_zero());
  CHECK((p * p).coeff({1, 1}) == 2);
  CHECK(p.pow(3).coeff({1, 2}) == 3);
  CHECK(p.pow(0) == Poly(1));
  CHECK((x * Rational(0)).is_zero());
  CHECK(partial_x(parse_poly("x^3*y + 2*y")) == parse_poly("3*x^2*y"));
  CHECK(partial_y(parse_poly("x^3*y + 2*y")) == parse_poly("x^3 + 2"));
  CHECK(parse_poly("x*y^3 + x^3").total_degree() == 4);
  CHECK(Poly().total_degree() == -1);
}

TEST_CASE("ring axioms on random samples") {
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly a = rng.poly(6), b = rng.poly(6), c = rng.poly(6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly());
    CHECK(add(a, b) == a + b);
    CHECK(sub(a, b) == a - b);
    CHECK(mul(a, b) == a * b);
    // Leibniz rule for the partials
    CHECK(partial_x(a * b) == partial_x(a) * b + a * partial_x(b));
    CHECK(partial_y(a * b) == partial_y(a) * b + a * partial_y(b));
    CHECK(parse_poly(render(a)) == a);
  }
}

TEST_CASE("weighted degrees") {
  WeightSystem w{3, 2};
  auto h = weighted_degree(parse_poly("x^3 + x*y^3"), w);
  CHECK(h.kind == Homogeneity::Kind::Homogeneous);
  CHECK(h.degree == 9);
  CHECK(weighted_degree(Poly(), w).kind == Homogeneity::Kind::Zero);
  CHECK(weighted_degree(Poly(), w).has_degree(5));
  CHECK_FALSE(weighted_degree(parse_poly("x + y"), w).homogeneous());
  auto comps = homogeneous_components(parse_poly("x + y + x*y"), w);
  REQUIRE(comps.size() == 3);
  CHECK(comps.at(5) == parse_poly("x*y"));
  GradedBasis b = monomials_of_degree(w, 6);
  REQUIRE(b.monomials.size() == 2);
  CHECK(b.monomials[0] == Monomial{0, 3});
  CHECK(b.monomials[1] == Monomial{2, 0});
  CHECK(monomials_of_degree(w, 1).monomials.empty());
}
