#include <doctest.h>

#include "oracle_rank.hpp"
#include "pcoh/arnold.hpp"
#include "pcoh/errors.hpp"
#include "pcoh/jet.hpp"
#include "pcoh/oracle.hpp"
#include "support.hpp"

using namespace pcoh;

using Tot = std::array<std::size_t, 3>;

TEST_CASE("graded counts match the independent complex degree by degree") {
  for (const char* sel : {"E6", "E8", "A4", "D5", "A3+"}) {
    auto P = instantiate(parse_type(sel));
    auto rep = graded_dims(P, 2 * P.d);
    CAPTURE(sel);
    for (const auto& row : rep.rows) {
      auto h = testing::graded_hp(P.f, P.w.w1, P.w.w2, P.d, row.degree);
      CHECK(row.hp[0] == h[0]);
      CHECK(row.hp[1] == h[1]);
      CHECK(row.hp[2] == h[2]);
    }
  }
}

TEST_CASE("graded oracle totals") {
  auto e6 = instantiate(parse_type("E6"));
  auto r = graded_dims(e6, 24);
  CHECK(r.totals == Tot{1, 1, 6});
  CHECK(r.mode == DimensionReport::Mode::Graded);
  auto d4 = instantiate(parse_type("D4-"));
  CHECK(graded_dims(d4, 2 * d4.d).totals == Tot{1, 3, 6});
  CHECK_THROWS_AS(graded_dims(instantiate(parse_type("E7", Rational(1))), 18), InputError);
}

TEST_CASE("graded slices") {
  auto e6 = instantiate(parse_type("E6"));
  auto sl = graded_slice(e6, 0);
  CHECK(sl.dim0 == 1);
  CHECK(sl.d0.cols() == 1);
  CHECK(sl.d1.cols() == sl.dim1);
  CHECK(rank(sl.d0) == 0);  // constants are Casimirs
}

TEST_CASE("jet oracle for h != 0") {
  auto e7 = instantiate(parse_type("E7", Rational(1)));
  auto r = jet_dims(e7, e7.default_jet_order());
  CHECK(r.totals == Tot{1, 2, 8});
  CHECK(r.stabilized);
  REQUIRE(r.totals_check);
  CHECK(r.check_order == e7.default_jet_order() + 4);
  auto d6 = instantiate(parse_type("D6-", Rational(1, 2), Rational(-1)));
  CHECK(oracle_dims(d6).totals == Tot{1, 3, 8});
}

TEST_CASE("jet complex squares to zero") {
  auto P = instantiate(parse_type("D4+", Rational(1), Rational(1)));
  JetComplex J(P, 2 * P.d);
  const Matrix& d0 = J.differential(0);
  const Matrix& d1 = J.differential(1);
  REQUIRE(d1.cols() == d0.rows());
  for (std::size_t i = 0; i < d1.rows(); ++i)
    for (std::size_t j = 0; j < d0.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < d0.rows(); ++k) s += d1(i, k) * d0(k, j);
      CHECK(s == 0);
    }
}

TEST_CASE("A3 chain sign") {
  // -2 y^3 dx^dy is -3 t1 (A3+) resp. 3 t1 (A3-), not the opposite class.
  for (int sg : {1, -1}) {
    auto P = instantiate(parse_type(sg > 0 ? "A3+" : "A3-", Rational(1)));
    int N = P.default_jet_order();
    Bivector b{parse_poly("-2*y^3")};
    Bivector right = b - Rational(-3 * sg) * P.t(0);
    Bivector wrong = b - Rational(3 * sg) * P.t(0);
    CHECK(is_coboundary_hp2(right, P, N).coboundary);
    CHECK_FALSE(is_coboundary_hp2(wrong, P, N).coboundary);
  }
}

TEST_CASE("bracket certificates") {
  auto P = instantiate(parse_type("E7", Rational(1)));
  int N = P.default_jet_order();
  HPElement v1 = zero_element(P, 1), w1 = zero_element(P, 2), good = zero_element(P, 2);
  v1.coords[1] = 1;
  w1.coords[0] = 1;
  good.coords[3] = -9;
  good.coords[6] = -13;
  CHECK(oracle_bracket_check(P, v1, w1, good, N).pass);
  HPElement bad = good;
  bad.coords[6] = 13;
  CHECK_FALSE(oracle_bracket_check(P, v1, w1, bad, N).pass);
}

TEST_CASE("normalization is sound on random inputs") {
  testing::Rng rng(41);
  for (const char* sel : {"A3+", "D4-", "E7", "D5", "A5-"}) {
    auto P = instantiate(parse_type(sel, Rational(1)));
    int N = P.default_jet_order();
    for (int i = 0; i < 10; ++i) {
      Poly g = rng.homogeneous(P.w, rng.uniform(0, 2 * P.d));
      Bivector b{g};
      HPElement e = to_element(normalize_hp2_pi(b, P));
      Bivector diff = b - representative(e, P).bivector();
      CAPTURE(sel);
      CAPTURE(render(g));
      CHECK(is_coboundary_hp2(diff, P, N).coboundary);
    }
  }
}
