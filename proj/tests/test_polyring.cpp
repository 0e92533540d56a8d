#include "doctest.h"

#include "cherncalc/error.hpp"
#include "support.hpp"

using namespace cherncalc;
using test::P;

TEST_CASE("arithmetic examples") {
  CHECK((P("x+y", 3) * P("x+y", 3)) == P("x^2 + 2*x*y + y^2", 3));
  const RatPoly p = P("3*x^2*y - 1/7*z + 2", 3);
  CHECK((p + Rational(-1) * p).is_zero());
  CHECK((P("1/2*x", 3) * P("2/3*y", 3)) == P("1/3*x*y", 3));
  CHECK(P("x*y - y*x", 3).is_zero());
}

TEST_CASE("ring mismatch is an error") {
  try {
    (void)(P("x", 2) + P("x", 3));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ring_mismatch);
  }
}

TEST_CASE("terms are canonical") {
  const RatPoly p = P("y^2 + x^2 + x*y - x*y", 2);
  REQUIRE(p.size() == 2);
  CHECK(p.to_string() == "x0^2 + x1^2");
  for (const auto& t : P("(x+2*y-z)^3", 3).terms()) CHECK(t.coeff != 0);
  CHECK(P("4/6*x", 1).terms()[0].coeff == Rational(2, 3));
}

TEST_CASE("partials") {
  CHECK(partial(P("x^2*y", 3), 0) == P("2*x*y", 3));
  CHECK(partial(P("y^2*z - x^3", 3), 0) == P("-3*x^2", 3));
  CHECK(partial(P("5/3", 3), 0).is_zero());
  const RatPoly f = P("x^3 + y^2*z + z^3", 3);
  CHECK(partial(f, 2).degree() == f.degree() - 1);
  CHECK_THROWS_AS((void)partial(f, 3), Error);
}

TEST_CASE("euler relation") {
  CHECK(euler_check(P("x^2*y", 3)));
  CHECK(euler_check(P("x*y + z^2", 3)));
  try {
    (void)euler_check(P("x^2 + y", 3));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_homogeneous);
  }
  for (const auto& m : monomials_of_degree(4, 3)) CHECK(euler_check(RatPoly::monomial(4, m, 7)));
}

TEST_CASE("random combinations") {
  const std::vector<RatPoly> x{P("x", 3)};
  std::mt19937_64 rng = substream(11, 0);
  for (int i = 0; i < 50; ++i) {
    const RatPoly p = random_combination(x, 5, rng);
    if (p.is_zero()) continue;
    REQUIRE(p.size() == 1);
    CHECK(abs(p.terms()[0].coeff) <= 5);
  }
  const std::vector<RatPoly> sq{P("x^2", 3), P("y^2", 3)};
  auto a = substream(42, 3), b = substream(42, 3);
  const RatPoly p = random_combination(sq, 3, a);
  CHECK(p == random_combination(sq, 3, b));
  for (const auto& t : p.terms()) CHECK(abs(t.coeff) <= 3);
  const std::vector<RatPoly> mixed{P("x^2", 3), P("y", 3)};
  CHECK_THROWS_AS((void)random_combination(mixed, 3, a), Error);
  CHECK_THROWS_AS((void)random_combination(std::span<const RatPoly>{}, 3, a), Error);
}

TEST_CASE("draw_int stays in range and covers it") {
  std::mt19937_64 rng(5);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 2000; ++i) {
    const long v = draw_int(rng, -3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    ++seen[static_cast<std::size_t>(v + 3)];
  }
  for (int s : seen) CHECK(s > 0);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const RatPoly a = test::random_poly(3, 3, 4, rng);
    const RatPoly b = test::random_poly(3, 3, 4, rng);
    const RatPoly c = test::random_poly(3, 2, 3, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("mixed partials commute") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 40; ++k) {
    const RatPoly p = test::random_poly(4, 5, 6, rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(partial(partial(p, i), j) == partial(partial(p, j), i));
  }
}

TEST_CASE("parser") {
  CHECK(P("y^2*z - x^3", 3) == P("x1^2 x2 - x0^3", 3));
  CHECK(P("-(x - 1/2)^2", 1) == P("-x^2 + x - 1/4", 1));
  CHECK(P("0", 3).is_zero());
  auto kind_of = [](const char* text) {
    try {
      (void)P(text, 3);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_argument;
  };
  CHECK(kind_of("x^") == ErrorKind::parse);
  CHECK(kind_of("x3") == ErrorKind::parse);
  CHECK(kind_of("1/0") == ErrorKind::parse);
  CHECK(kind_of("(x+y") == ErrorKind::parse);
  CHECK(kind_of("x $ y") == ErrorKind::parse);
}

TEST_CASE("ideals") {
  CHECK_THROWS_AS(Ideal(3, {P("x", 3), RatPoly(3)}), Error);
  CHECK_THROWS_AS(Ideal(3, {P("x", 2)}), Error);
  const Ideal j = test::I(3, {"y", "x"});
  CHECK(j.generators()[0] == P("y", 3));
  CHECK(j.is_homogeneous());
  CHECK_FALSE(test::I(3, {"x^2 + y"}).is_homogeneous());
}
