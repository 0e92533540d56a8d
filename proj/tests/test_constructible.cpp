#include "doctest.h"

#include "cherncalc/constructible.hpp"
#include "cherncalc/error.hpp"
#include "cherncalc/json_io.hpp"
#include "support.hpp"

using namespace cherncalc;
using test::C;

namespace {

const std::string fixtures = FIXTURE_DIR;

StrataData cubic() { return strata_from_json(read_json_file(fixtures + "/cubic_strata.json")); }

ConstructibleFunction expected_nu() {
  return ConstructibleFunction({{"C", 2}, {"G", 1}, {"P", 0}, {"T", 1}, {"S", 3}, {"X", 1}, {"I", 1}});
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_argument;
}

StrataPoset chain() {
  return StrataPoset({{"a", 2}, {"b", 1}, {"c", 0}}, {{"b", "a"}, {"c", "b"}});
}

}  // namespace

TEST_CASE("poset closure") {
  const StrataPoset p = chain();
  CHECK(p.below("c", "a"));
  CHECK(p.below("b", "a"));
  CHECK_FALSE(p.below("a", "c"));
  CHECK_FALSE(p.below("a", "a"));
  CHECK(p.top_down() == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(StrataPoset({{"a", 1}, {"a", 0}}, {}), Error);
  CHECK_THROWS_AS(StrataPoset({{"a", 1}}, {{"z", "a"}}), Error);
  CHECK_THROWS_AS(StrataPoset({{"a", 1}, {"b", 1}}, {{"b", "a"}}), Error);

  const auto data = cubic();
  const auto& q = data.poset;
  CHECK(q.below("S", "G"));
  CHECK(q.below("I", "C"));
  CHECK(q.below("X", "T"));
  CHECK_FALSE(q.below("T", "C"));
  CHECK_FALSE(q.below("P", "T"));
  CHECK(q.top_down() == std::vector<std::string>{"C", "G", "P", "T", "S", "X", "I"});
}

TEST_CASE("solving in a basis") {
  const std::vector<std::pair<std::string, ChowClass>> identity = {
      {"a", C(2, {1, 0, 0})}, {"b", C(2, {0, 1, 0})}, {"c", C(2, {0, 0, 1})}};
  const auto id = solve_in_basis(C(2, {4, -1, 0}), identity);
  CHECK(id("a") == 4);
  CHECK(id("b") == -1);
  CHECK(id("c") == 0);

  const std::vector<std::pair<std::string, ChowClass>> two = {{"u", C(1, {1, 2})}, {"v", C(1, {3, 4})}};
  const auto uv = solve_in_basis(C(1, {5, 6}), two);
  CHECK(uv("u") == -1);
  CHECK(uv("v") == 2);
  CHECK(recombine(uv, two) == C(1, {5, 6}));
  CHECK(solve_in_basis(ChowClass(1), two) == ConstructibleFunction({{"u", 0}, {"v", 0}}));

  const std::vector<std::pair<std::string, ChowClass>> dup = {{"u", C(1, {1, 2})}, {"v", C(1, {2, 4})}};
  CHECK(kind_of([&] { (void)solve_in_basis(C(1, {1, 2}), dup); }) == ErrorKind::rank_deficient);
  CHECK(kind_of([&] { (void)solve_in_basis(C(1, {1, 3}), dup); }) == ErrorKind::inconsistent_system);
  const auto a = analyze_in_basis(C(1, {1, 3}), dup);
  CHECK(a.rank == 1);
  CHECK_FALSE(a.consistent);
  CHECK(a.residual != 0);
  const std::vector<std::pair<std::string, ChowClass>> narrow = {{"u", C(2, {0, 1, 0})}};
  CHECK(kind_of([&] { (void)solve_in_basis(C(2, {0, 1, 1}), narrow); }) ==
        ErrorKind::inconsistent_system);
}

TEST_CASE("random invertible bases round trip") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 50; ++k) {
    const int n = static_cast<int>(draw_int(rng, 1, 5));
    // lower triangular with unit diagonal in the [P^k] order, then mixed up
    std::vector<std::pair<std::string, ChowClass>> basis;
    for (int i = 0; i <= n; ++i) {
      ChowClass b = ChowClass::h_power(n, i);
      for (int j = i + 1; j <= n; ++j) b = b + Rational(draw_int(rng, -3, 3)) * ChowClass::h_power(n, j);
      basis.push_back({"e" + std::to_string(i), b});
    }
    const ChowClass target = test::random_class(n, rng);
    const auto sol = solve_in_basis(target, basis);
    CHECK(recombine(sol, basis) == target);
  }
}

TEST_CASE("strata CSM basis is rank deficient") {
  const auto data = cubic();
  const ChowClass target = chow_from_json(read_json_file(fixtures + "/cubic_target.json"));
  const auto a = analyze_in_basis(target, data.csm);
  CHECK(a.rank == 6);
  CHECK(a.consistent);
  REQUIRE(a.kernel.size() == 1);
  CHECK(recombine(a.kernel[0], data.csm).is_zero());
  // 7C - 8G - 3P + 2S, up to scale
  const auto& v = a.kernel[0];
  CHECK(v("G") == Rational(-8, 7) * v("C"));
  CHECK(v("P") == Rational(-3, 7) * v("C"));
  CHECK(v("S") == Rational(2, 7) * v("C"));
  CHECK(v("T") == 0);
  CHECK(v("X") == 0);
  CHECK(v("I") == 0);
  CHECK(recombine(a.particular, data.csm) == target);
  CHECK(recombine(expected_nu(), data.csm) == target);
  try {
    (void)solve_in_basis(target, data.csm);
    FAIL("expected rank_deficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::rank_deficient);
    CHECK(std::string(e.what()).find("rank 6") != std::string::npos);
  }
}

TEST_CASE("Euler obstruction decomposition") {
  const auto data = cubic();
  validate_eu(data.eu, data.poset);
  const auto l = eu_decompose(expected_nu(), data.eu, data.poset);
  CHECK(l("C") == 2);
  CHECK(l("G") == 1);
  CHECK(l("P") == -3);
  CHECK(l("T") == -2);
  CHECK(l.values().size() == 4);
  const auto back = eu_recompose(l, data.eu, data.poset);
  for (const char* z : {"C", "G", "P", "T"}) CHECK(back(z) == expected_nu()(z));

  const auto m = cone_multiplicities(l);
  REQUIRE(m.size() == 4);
  CHECK(m[0].label == "C");
  CHECK(m[0].multiplicity == 2);
  CHECK(m[0].sign == 1);
  CHECK(m[2].label == "P");
  CHECK(m[2].multiplicity == 3);
  CHECK(m[2].sign == -1);
  CHECK(m[3].multiplicity == 2);
}

TEST_CASE("random unitriangular round trip") {
  const auto data = cubic();
  const auto& poset = data.poset;
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    std::map<std::string, std::map<std::string, Rational>> rows;
    for (const auto& z : poset.strata()) {
      auto& row = rows[z.label];
      row[z.label] = 1;
      for (const auto& w : poset.strata())
        if (poset.below(w.label, z.label)) row[w.label] = draw_int(rng, -4, 4);
    }
    const EuMatrix eu(rows);
    validate_eu(eu, poset);
    ConstructibleFunction coeffs;
    for (const auto& z : poset.strata()) coeffs.set(z.label, draw_int(rng, -6, 6));
    const auto nu = eu_recompose(coeffs, eu, poset);
    const auto again = eu_decompose(nu, eu, poset);
    for (const auto& z : poset.strata()) CHECK(again(z.label) == coeffs(z.label));
  }
}

TEST_CASE("Eu validation") {
  const StrataPoset p = chain();
  using Rows = std::map<std::string, std::map<std::string, Rational>>;
  validate_eu(EuMatrix(Rows{{"a", {{"a", 1}, {"b", 2}, {"c", 0}}}, {"b", {{"b", 1}, {"c", 1}}}, {"c", {}}}), p);
  // domain {a} alone is upward closed
  validate_eu(EuMatrix(Rows{{"a", {}}}), p);
  CHECK(kind_of([&] { validate_eu(EuMatrix(Rows{{"b", {{"b", 1}}}}), p); }) ==
        ErrorKind::not_unitriangular);
  CHECK(kind_of([&] { validate_eu(EuMatrix(Rows{{"a", {{"a", 2}}}}), p); }) ==
        ErrorKind::not_unitriangular);
  CHECK(kind_of([&] {
          validate_eu(EuMatrix(Rows{{"a", {{"a", 1}, {"b", 1}}}, {"b", {{"b", 1}, {"a", 5}}}}), p);
        }) == ErrorKind::not_unitriangular);
  CHECK(kind_of([&] { validate_eu(EuMatrix(Rows{{"q", {}}}), p); }) != ErrorKind::non_integral);
  // a row whose entries below the diagonal are missing inside the domain
  CHECK_THROWS_AS(validate_eu(EuMatrix(Rows{{"a", {{"a", 1}}}, {"b", {{"b", 1}}}}), p), Error);
}

TEST_CASE("cone multiplicities") {
  CHECK(cone_multiplicities(ConstructibleFunction({{"a", 0}})).empty());
  const auto m = cone_multiplicities(ConstructibleFunction({{"a", -4}, {"b", 0}, {"c", 1}}));
  REQUIRE(m.size() == 2);
  CHECK(m[0].multiplicity == 4);
  CHECK(m[0].sign == -1);
  CHECK(m[1].label == "c");
  CHECK(kind_of([] { (void)cone_multiplicities(ConstructibleFunction({{"a", Rational(1, 2)}})); }) ==
        ErrorKind::non_integral);
}
