#include "doctest.h"

#include <sstream>

#include "cherncalc/cli.hpp"
#include "cherncalc/json_io.hpp"

using namespace cherncalc;

namespace {

const std::string fixtures = FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> strings(const Json& j) {
  std::vector<std::string> v;
  for (const auto& x : j) v.push_back(x.get<std::string>());
  return v;
}

using S = std::vector<std::string>;

}  // namespace

TEST_CASE("report") {
  const auto node = run({"report", "--n", "2", "y^2*z - x^2*z - x^3"});
  REQUIRE(node.code == 0);
  CHECK(strings(node.json()["milnor"]["coeffs"]) == S{"0", "0", "1"});
  CHECK(node.json()["chi"] == "1");
  CHECK(node.json()["config"]["seed"] == "0");

  const auto conic = run({"report", "--n", "2", "x^2+y^2+z^2"});
  REQUIRE(conic.code == 0);
  CHECK(strings(conic.json()["milnor"]["coeffs"]) == S{"0", "0", "0"});
  CHECK(conic.json()["chi"] == "2");

  const auto dl = run({"report", "--n", "2", "x^2"});
  REQUIRE(dl.code == 0);
  CHECK(dl.json()["chi"] == "2");
  CHECK(dl.json()["dim_singular"] == 1);
}

TEST_CASE("text format shows both forms") {
  const auto r = run({"report", "--n", "2", "x^2", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("h + 2h^2  =  [P^1] + 2[P^0]") != std::string::npos);
  CHECK(r.out.find("chi: 2") != std::string::npos);
  CHECK(r.out.find("config: seed 0") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto syntax = run({"report", "--n", "2", "x^2 +* y"});
  CHECK(syntax.code == 2);
  CHECK(syntax.error()["error"] == "parse");
  CHECK(run({"report", "--n", "1", "z^2"}).code == 2);
  const auto inhom = run({"report", "--n", "2", "x^2 + y"});
  CHECK(inhom.code == 3);
  CHECK(inhom.error()["error"] == "not_homogeneous");
  CHECK(run({"report", "--n", "2", "x^2", "--trials", "1"}).code == 2);
  CHECK(run({"report", "--n", "2", "x^2", "--bound", "0"}).code == 2);
  CHECK(run({"report", "--n", "2", "x^2", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto budget = run({"report", "--n", "3", "x*y*z*w + x^4 + y^4", "--budget", "3"});
  CHECK(budget.code == 5);
  CHECK(budget.error()["error"] == "budget_exceeded");
  const auto mc = run({"segre", "--n", "2", "x*y", "x*z", "--bound", "1", "--trials", "2", "--seed", "3"});
  CHECK((mc.code == 0 || mc.code == 4));
  CHECK(exit_code_for("monte_carlo_disagreement") == 4);
  CHECK(exit_code_for("rank_deficient") == 1);
}

TEST_CASE("segre and gb") {
  const auto s = run({"segre", "--n", "2", "x", "y"});
  REQUIRE(s.code == 0);
  CHECK(strings(s.json()["segre"]["coeffs"]) == S{"0", "0", "1"});
  const auto g = run({"gb", "--n", "2", "x^2", "y^2"});
  REQUIRE(g.code == 0);
  CHECK(g.json()["degree"] == "4");
  CHECK(g.json()["projective_dimension"] == 0);
}

TEST_CASE("nc and family") {
  const auto nc = run({"nc", "--n", "2", "--components", "1:1,1:1,1:1"});
  REQUIRE(nc.code == 0);
  CHECK(strings(nc.json()["weighted_mather"]["coeffs"]) == S{"0", "0", "3"});
  const auto fam = run({"family", "--n", "3", "--d", "3", "--g", "0", "--r", "1", "--m", "3"});
  REQUIRE(fam.code == 0);
  CHECK(fam.json()["residual"] == "0");
  CHECK(run({"nc", "--n", "2", "--components", "1:x"}).code == 2);
}

TEST_CASE("nu") {
  const std::string strata = fixtures + "/cubic_strata.json";
  const auto solve = run({"nu", strata, "--target", fixtures + "/cubic_target.json"});
  CHECK(solve.code == 1);
  CHECK(solve.error()["error"] == "rank_deficient");
  CHECK(solve.error()["message"].get<std::string>().find("rank 6") != std::string::npos);

  const auto given = run({"nu", strata, "--nu", fixtures + "/nu_cubic.json"});
  REQUIRE(given.code == 0);
  const Json j = given.json();
  CHECK(j["eu_coefficients"]["C"] == "2");
  CHECK(j["eu_coefficients"]["G"] == "1");
  CHECK(j["eu_coefficients"]["P"] == "-3");
  CHECK(j["eu_coefficients"]["T"] == "-2");
  S mult;
  for (const auto& m : j["multiplicities"]) mult.push_back(m["multiplicity"].get<std::string>());
  CHECK(mult == S{"2", "1", "3", "2"});

  CHECK(run({"nu", strata}).code != 0);
  CHECK(run({"nu", fixtures + "/missing.json", "--nu", fixtures + "/nu_cubic.json"}).code == 2);
}

TEST_CASE("byte determinism") {
  const S args{"report", "--n", "3", "x*y*z + w^3", "--seed", "77"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find('.') == std::string::npos);
  const auto c = run({"report", "--n", "3", "x*y*z + w^3", "--seed", "78"});
  CHECK(c.json()["csm"] == a.json()["csm"]);
}
