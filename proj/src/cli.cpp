#include "cherncalc/cli.hpp"

#include <sstream>

#include "CLI11.hpp"

#include "cherncalc/constructible.hpp"
#include "cherncalc/error.hpp"
#include "cherncalc/groebner.hpp"
#include "cherncalc/hypersurface.hpp"
#include "cherncalc/json_io.hpp"
#include "cherncalc/poly_parser.hpp"
#include "cherncalc/segre.hpp"

namespace cherncalc {

namespace {

struct RunConfig {
  int n = -1;
  std::uint64_t seed = 0;
  long bound = 1009;
  int trials = 5;
  std::string format = "json";
  std::uint64_t budget = 1'000'000;

  SegreConfig segre() const {
    SegreConfig c;
    c.seed = seed;
    c.bound = bound;
    c.trials = trials;
    c.groebner.step_budget = budget;
    c.degree.groebner.step_budget = budget;
    return c;
  }
};

void add_common(CLI::App* sub, RunConfig& rc, bool needs_n) {
  auto* n = sub->add_option("--n", rc.n, "ambient P^n")->check(CLI::NonNegativeNumber);
  if (needs_n) n->required();
  sub->add_option("--seed", rc.seed, "random seed");
  sub->add_option("--bound", rc.bound, "coefficient bound")->check(CLI::Range(1L, 1L << 40));
  sub->add_option("--trials", rc.trials, "Monte Carlo draws")->check(CLI::Range(2, 1000));
  sub->add_option("--format", rc.format)->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--budget", rc.budget, "Groebner step budget")->check(CLI::PositiveNumber);
}

// text form: both h^k and [P^k]
std::string show(const ChowClass& c) {
  return c.to_string() + "  =  " + c.to_point_string();
}

Ideal ideal_of(const std::vector<std::string>& texts, int n) {
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  std::vector<RatPoly> gens;
  for (const auto& t : texts) {
    RatPoly p = parse_polynomial(t, nv);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  if (gens.empty()) throw Error(ErrorKind::invalid_argument, "no nonzero generators");
  return Ideal(nv, std::move(gens));
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Rational q = parse_rational(item);
    if (!is_integral(q) || !q.get_num().fits_slong_p())
      throw Error(ErrorKind::parse, "expected an integer, got " + item);
    out.push_back(q.get_num().get_si());
  }
  return out;
}

void emit(std::ostream& out, const RunConfig& rc, const Json& j,
          const std::vector<std::pair<std::string, std::string>>& text) {
  if (rc.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : text) out << k << ": " << v << "\n";
  const SegreConfig c = rc.segre();
  out << "config: seed " << c.seed << ", bound " << c.bound << ", trials " << c.trials
      << ", budget " << c.groebner.step_budget << "\n";
}

void cmd_report(std::ostream& out, const RunConfig& rc, const std::string& poly) {
  const SegreConfig config = rc.segre();
  const RatPoly f = parse_polynomial(poly, static_cast<std::size_t>(rc.n) + 1);
  const HypersurfaceReport r = full_report(f, config);
  std::string ideal;
  for (const auto& g : r.singular_ideal.generators())
    ideal += (ideal.empty() ? "" : ", ") + g.to_string();
  emit(out, rc, report_to_json(r, config),
       {{"hypersurface", f.to_string()},
        {"n", std::to_string(r.n)},
        {"degree", std::to_string(r.degree)},
        {"singular ideal", "(" + ideal + ")"},
        {"dim Y", std::to_string(r.singular_dimension)},
        {"segre", show(r.segre)},
        {"weighted mather", show(r.weighted_mather)},
        {"mu", show(r.mu)},
        {"fulton", show(r.fulton)},
        {"csm", show(r.schwartz_macpherson)},
        {"milnor", show(r.milnor)},
        {"chi", to_string(r.euler_characteristic)}});
}

void cmd_segre(std::ostream& out, const RunConfig& rc, const std::vector<std::string>& gens) {
  const SegreConfig config = rc.segre();
  const EqualizedIdeal eq = equalize_degrees(ideal_of(gens, rc.n));
  const ProjectiveDegrees pd = projective_degrees(eq.ideal, eq.generator_degree, config);
  const ChowClass s = segre_class(pd);
  Json degs = Json::array();
  std::string degs_text;
  for (auto g : pd.degrees) {
    degs.push_back(std::to_string(g));
    degs_text += (degs_text.empty() ? "" : ", ") + std::to_string(g);
  }
  emit(out, rc,
       Json{{"generator_degree", std::to_string(pd.generator_degree)},
            {"projective_degrees", degs},
            {"segre", chow_to_json(s)},
            {"config", config_to_json(config)}},
       {{"generator degree", std::to_string(pd.generator_degree)},
        {"projective degrees", "(" + degs_text + ")"},
        {"segre", show(s)}});
}

void cmd_gb(std::ostream& out, const RunConfig& rc, const std::vector<std::string>& gens) {
  const SegreConfig config = rc.segre();
  const Ideal ideal = ideal_of(gens, rc.n);
  const GroebnerBasis gb =
      buchberger(ideal, MonomialOrder::degrevlex(ideal.nvars()), config.groebner);
  Json j{{"basis", basis_to_json(gb)}};
  std::vector<std::pair<std::string, std::string>> text;
  for (const auto& g : gb.elements()) text.emplace_back("basis", g.to_string());
  if (ideal.is_homogeneous()) {
    const int dim = projective_dimension(ideal, config.groebner);
    j["projective_dimension"] = dim;
    text.emplace_back("projective dimension", std::to_string(dim));
    if (dim <= 0) {
      std::mt19937_64 rng = substream(config.seed, 0);
      const auto deg = degree_zero_dim(ideal, rng, config.degree);
      j["degree"] = std::to_string(deg);
      text.emplace_back("degree", std::to_string(deg));
    }
  }
  j["config"] = config_to_json(config);
  emit(out, rc, j, text);
}

void cmd_nc(std::ostream& out, const RunConfig& rc, const std::string& spec) {
  std::vector<CrossingComponent> comps;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    const auto a = parse_longs(item.substr(0, colon));
    const auto r = colon == std::string::npos ? std::vector<long>{1}
                                              : parse_longs(item.substr(colon + 1));
    if (a.size() != 1 || r.size() != 1)
      throw Error(ErrorKind::parse, "components are degree:multiplicity, got " + item);
    comps.push_back({a[0], r[0]});
  }
  if (comps.empty()) throw Error(ErrorKind::parse, "no components");
  const NormalCrossingsResult res = normal_crossings_cwma(rc.n, comps);
  emit(out, rc,
       Json{{"weighted_mather", chow_to_json(res.weighted_mather)},
            {"reduced", res.reduced},
            {"mixed_multiplicities", res.mixed},
            {"config", config_to_json(rc.segre())}},
       {{"weighted mather", show(res.weighted_mather)},
        {"reduced", res.reduced ? "yes" : "no"},
        {"mixed multiplicities", res.mixed ? "yes" : "no"}});
}

struct FamilyArgs {
  long d = 2, g = 0, r = 1;
  std::string m;
};

void cmd_family(std::ostream& out, const RunConfig& rc, const FamilyArgs& fa) {
  const auto m = parse_longs(fa.m);
  const ChowClass s = curve_family_segre(rc.n, fa.g, fa.r, m);
  const ChowClass cw = curve_family_cwma(rc.n, fa.g, fa.r, m);
  const ChowClass transform = weighted_mather(s, fa.d, 1);
  const Rational residual = claim33_check(rc.n, fa.d, fa.g, fa.r, m);
  emit(out, rc,
       Json{{"segre", chow_to_json(s)},
            {"weighted_mather", chow_to_json(cw)},
            {"transformed_segre", chow_to_json(transform)},
            {"residual", rational_to_json(residual)},
            {"consistent", residual == 0},
            {"config", config_to_json(rc.segre())}},
       {{"segre", show(s)},
        {"weighted mather", show(cw)},
        {"transformed segre", show(transform)},
        {"residual", to_string(residual)},
        {"consistent", residual == 0 ? "yes" : "no"}});
}

void cmd_nu(std::ostream& out, const RunConfig& rc, const std::string& strata_path,
            const std::string& target_path, const std::string& nu_path) {
  const StrataData data = strata_from_json(read_json_file(strata_path));
  ConstructibleFunction nu;
  if (!target_path.empty()) {
    nu = solve_in_basis(chow_from_json(read_json_file(target_path)), data.csm);
  } else {
    const Json values = read_json_file(nu_path);
    for (const auto& [label, v] : values.items()) {
      if (!data.poset.contains(label))
        throw Error(ErrorKind::invalid_argument, "nu given on unknown stratum " + label);
      nu.set(label, rational_from_json(v));
    }
  }
  const ConstructibleFunction coeffs = eu_decompose(nu, data.eu, data.poset);
  const auto mult = cone_multiplicities(coeffs);
  Json mj = Json::array();
  std::string mtext;
  for (const auto& c : mult) {
    mj.push_back(Json{{"label", c.label},
                      {"multiplicity", c.multiplicity.get_str()},
                      {"sign", c.sign > 0 ? "+" : "-"}});
    mtext += (mtext.empty() ? "" : ", ") + c.multiplicity.get_str() + " over " + c.label;
  }
  auto values = [](const ConstructibleFunction& f) {
    std::string s;
    for (const auto& [l, v] : f.values()) s += (s.empty() ? "" : ", ") + l + "=" + to_string(v);
    return s;
  };
  emit(out, rc,
       Json{{"nu", constructible_to_json(nu)},
            {"eu_coefficients", constructible_to_json(coeffs)},
            {"multiplicities", mj},
            {"config", config_to_json(rc.segre())}},
       {{"nu", values(nu)}, {"eu coefficients", values(coeffs)}, {"multiplicities", mtext}});
}

}  // namespace

int exit_code_for(const std::string& kind) {
  if (kind == "parse") return 2;
  if (kind == "not_homogeneous") return 3;
  if (kind == "monte_carlo_disagreement") return 4;
  if (kind == "budget_exceeded") return 5;
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact characteristic classes of projective hypersurfaces", "cherncalc"};
  app.require_subcommand(1);
  RunConfig rc;
  std::string poly, strata_path, target_path, nu_path, components;
  std::vector<std::string> gens;
  FamilyArgs fa;

  auto* report = app.add_subcommand("report", "all classes of V(F) in P^n");
  add_common(report, rc, true);
  report->add_option("F", poly, "homogeneous polynomial")->required();

  auto* segre = app.add_subcommand("segre", "Segre class of V(I) in P^n");
  add_common(segre, rc, true);
  segre->add_option("generators", gens)->required();

  auto* gb = app.add_subcommand("gb", "reduced degrevlex Groebner basis");
  add_common(gb, rc, true);
  gb->add_option("generators", gens)->required();

  auto* nc = app.add_subcommand("nc", "weighted Chern-Mather class of a normal crossings divisor");
  add_common(nc, rc, true);
  nc->add_option("--components", components, "degree:multiplicity,...")->required();

  auto* family = app.add_subcommand("family", "curve with embedded points of given multiplicity");
  add_common(family, rc, true);
  family->add_option("--d", fa.d)->check(CLI::PositiveNumber);
  family->add_option("--g", fa.g)->check(CLI::NonNegativeNumber);
  family->add_option("--r", fa.r)->check(CLI::PositiveNumber);
  family->add_option("--m", fa.m, "comma separated point multiplicities");

  auto* nu = app.add_subcommand("nu", "solve for nu and decompose in the Eu basis");
  add_common(nu, rc, false);
  nu->add_option("strata", strata_path)->required();
  auto* target_opt = nu->add_option("--target", target_path, "class to expand in the CSM basis");
  auto* nu_opt = nu->add_option("--nu", nu_path, "values of nu, skipping the solve");
  target_opt->excludes(nu_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*report) cmd_report(out, rc, poly);
    else if (*segre) cmd_segre(out, rc, gens);
    else if (*gb) cmd_gb(out, rc, gens);
    else if (*nc) cmd_nc(out, rc, components);
    else if (*family) cmd_family(out, rc, fa);
    else if (*nu) {
      if (target_path.empty() && nu_path.empty())
        throw Error(ErrorKind::parse, "nu needs --target or --nu");
      cmd_nu(out, rc, strata_path, target_path, nu_path);
    }
  } catch (const Error& e) {
    const std::string kind = to_string(e.kind());
    err << Json{{"error", kind}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(kind);
  } catch (const std::exception& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cherncalc
