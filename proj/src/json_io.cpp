#include "cherncalc/json_io.hpp"

#include <fstream>

#include "cherncalc/error.hpp"

namespace cherncalc {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw Error(ErrorKind::parse, "expected an exact rational, got " + j.dump());
}

Json chow_to_json(const ChowClass& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_json(q));
  return Json{{"n", c.n()}, {"coeffs", coeffs}};
}

ChowClass chow_from_json(const Json& j) {
  try {
    if (j.contains("coeffs")) {
      const auto& arr = j.at("coeffs");
      const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(arr.size()) - 1;
      std::vector<Rational> coeffs;
      for (const auto& v : arr) coeffs.push_back(rational_from_json(v));
      return ChowClass(n, std::move(coeffs));
    }
    const int n = j.at("n").get<int>();
    ChowClass c(n);
    for (const auto& [k, v] : j.at("points").items()) {
      const int p = std::stoi(k);
      if (p < 0 || p > n) throw Error(ErrorKind::parse, "no [P^" + k + "] on P^" + std::to_string(n));
      c = c + rational_from_json(v) * ChowClass::point_class(n, p);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad class: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "bad [P^k] key");
  }
}

Json config_to_json(const SegreConfig& config) {
  return Json{{"seed", std::to_string(config.seed)},
              {"bound", std::to_string(config.bound)},
              {"trials", std::to_string(config.trials)},
              {"budget", std::to_string(config.groebner.step_budget)}};
}

Json report_to_json(const HypersurfaceReport& r, const SegreConfig& config) {
  Json ideal = Json::array();
  for (const auto& g : r.singular_ideal.generators()) ideal.push_back(g.to_string());
  return Json{{"n", r.n},
              {"degree", r.degree},
              {"singular_ideal", ideal},
              {"dim_singular", r.singular_dimension},
              {"segre", chow_to_json(r.segre)},
              {"weighted_mather", chow_to_json(r.weighted_mather)},
              {"mu", chow_to_json(r.mu)},
              {"fulton", chow_to_json(r.fulton)},
              {"csm", chow_to_json(r.schwartz_macpherson)},
              {"milnor", chow_to_json(r.milnor)},
              {"chi", rational_to_json(r.euler_characteristic)},
              {"config", config_to_json(config)}};
}

Json constructible_to_json(const ConstructibleFunction& f) {
  Json out = Json::object();
  for (const auto& [label, v] : f.values()) out[label] = rational_to_json(v);
  return out;
}

Json basis_to_json(const GroebnerBasis& gb) {
  Json out = Json::array();
  for (const auto& g : gb.elements()) out.push_back(g.to_string());
  return out;
}

StrataData strata_from_json(const Json& j) {
  try {
    std::vector<Stratum> strata;
    for (const auto& s : j.at("strata"))
      strata.push_back({s.at("label").get<std::string>(), s.at("dim").get<int>()});
    std::vector<std::pair<std::string, std::string>> closure;
    if (j.contains("closure"))
      for (const auto& p : j.at("closure")) {
        if (p.size() != 2) throw Error(ErrorKind::parse, "closure pairs have two labels");
        closure.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    StrataData out{StrataPoset(std::move(strata), closure), {}, {}};
    if (j.contains("csm")) {
      // basis in stratum order, not file order
      for (const auto& s : out.poset.strata()) {
        if (!j.at("csm").contains(s.label)) continue;
        Json cls{{"coeffs", j.at("csm").at(s.label)}};
        if (j.contains("n")) cls["n"] = j.at("n");
        out.csm.emplace_back(s.label, chow_from_json(cls));
      }
      for (const auto& [label, v] : j.at("csm").items())
        if (!out.poset.contains(label))
          throw Error(ErrorKind::invalid_argument, "CSM class for unknown stratum " + label);
    }
    if (j.contains("eu")) {
      std::map<std::string, std::map<std::string, Rational>> rows;
      for (const auto& [z, row] : j.at("eu").items())
        for (const auto& [w, v] : row.items()) rows[z][w] = rational_from_json(v);
      out.eu = EuMatrix(std::move(rows));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad strata file: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

}  // namespace cherncalc
