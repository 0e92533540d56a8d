#include "cherncalc/segre.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "cherncalc/error.hpp"

namespace cherncalc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RatPoly nonzero_combination(std::span<const RatPoly> gens, long bound, std::mt19937_64& rng) {
  while (true) {
    RatPoly p = random_combination(gens, bound, rng);
    if (!p.is_zero()) return p;
  }
}

RatPoly nonzero_linear_form(std::size_t nvars, long bound, std::mt19937_64& rng) {
  while (true) {
    RatPoly p = random_linear_form(nvars, bound, rng);
    if (!p.is_zero()) return p;
  }
}

std::uint64_t single_degree(const Ideal& ideal, int i, std::uint64_t seed,
                            const SegreConfig& config) {
  const std::size_t nv = ideal.nvars();
  const int n = static_cast<int>(nv) - 1;
  std::mt19937_64 rng = substream(seed, static_cast<std::uint64_t>(i));
  const auto& gens = ideal.generators();
  const RatPoly p0 = nonzero_combination(gens, config.bound, rng);
  std::vector<RatPoly> section;
  for (int j = 0; j < i; ++j) section.push_back(nonzero_combination(gens, config.bound, rng));
  for (int j = 0; j < n - i; ++j) section.push_back(nonzero_linear_form(nv, config.bound, rng));
  const Ideal residual = saturate(Ideal(nv, std::move(section)), p0, config.groebner);
  return degree_zero_dim(residual, rng, config.degree);
}

std::string describe(const ProjectiveDegrees& pd) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < pd.degrees.size(); ++i) out << (i ? "," : "") << pd.degrees[i];
  out << ")";
  return out.str();
}

}  // namespace

EqualizedIdeal equalize_degrees(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorKind::not_homogeneous, "degree equalization needs homogeneous generators");
  int top = 0;
  for (const auto& g : ideal.generators()) top = std::max(top, g.degree());
  std::vector<RatPoly> padded;
  for (const auto& g : ideal.generators()) {
    const int gap = top - g.degree();
    if (gap == 0) {
      padded.push_back(g);
      continue;
    }
    for (const auto& m : monomials_of_degree(ideal.nvars(), static_cast<unsigned>(gap)))
      padded.push_back(g.mul_term(m, 1));
  }
  return {Ideal(ideal.nvars(), std::move(padded)), top};
}

ProjectiveDegrees projective_degrees_draw(const Ideal& ideal, long generator_degree,
                                          std::uint64_t seed, const SegreConfig& config) {
  if (ideal.size() == 0) throw Error(ErrorKind::invalid_argument, "ideal has no generators");
  if (ideal.nvars() < 2) throw Error(ErrorKind::invalid_argument, "projective degrees need n >= 1");
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous())
      throw Error(ErrorKind::not_homogeneous, "generator " + g.to_string() + " is not homogeneous");
    if (g.degree() != generator_degree)
      throw Error(ErrorKind::invalid_argument,
                  "generators are not equalized to degree " + std::to_string(generator_degree));
  }
  const int n = static_cast<int>(ideal.nvars()) - 1;
  ProjectiveDegrees pd;
  pd.generator_degree = generator_degree;
  pd.degrees.resize(static_cast<std::size_t>(n) + 1);
  if (config.parallel) {
    std::vector<std::future<std::uint64_t>> jobs;
    for (int i = 0; i <= n; ++i)
      jobs.push_back(std::async(std::launch::async, single_degree, std::cref(ideal), i, seed,
                                std::cref(config)));
    for (int i = 0; i <= n; ++i) pd.degrees[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].get();
  } else {
    for (int i = 0; i <= n; ++i)
      pd.degrees[static_cast<std::size_t>(i)] = single_degree(ideal, i, seed, config);
  }
  return pd;
}

ProjectiveDegrees projective_degrees(const Ideal& ideal, long generator_degree,
                                     const SegreConfig& config) {
  if (config.trials < 2) throw Error(ErrorKind::invalid_argument, "trials must be >= 2");
  if (config.bound < 1) throw Error(ErrorKind::invalid_argument, "bound must be >= 1");
  std::vector<ProjectiveDegrees> seen;
  int degenerate = 0;
  for (int t = 0; t < config.trials; ++t) {
    const std::uint64_t draw_seed = splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(t)));
    ProjectiveDegrees pd;
    try {
      pd = projective_degrees_draw(ideal, generator_degree, draw_seed, config);
    } catch (const Error& e) {
      // a non-generic section leaves a positive-dimensional residual
      if (e.kind() != ErrorKind::not_zero_dimensional && e.kind() != ErrorKind::unlucky_coordinates)
        throw;
      ++degenerate;
      continue;
    }
    if (std::find(seen.begin(), seen.end(), pd) != seen.end()) return pd;
    seen.push_back(std::move(pd));
  }
  std::string msg = "projective degree draws never agreed:";
  for (const auto& pd : seen) msg += " " + describe(pd);
  if (degenerate > 0) msg += " (" + std::to_string(degenerate) + " degenerate draws)";
  throw Error(ErrorKind::monte_carlo_disagreement, msg);
}

ChowClass segre_class(const ProjectiveDegrees& pd) {
  const int n = pd.n();
  if (n < 0) throw Error(ErrorKind::invalid_argument, "empty projective degree sequence");
  const Integer d = pd.generator_degree;
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 1; k <= n; ++k) {
    Integer sum = 0;
    for (int j = 0; j <= k; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
      Integer dpow;
      mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k - j));
      Integer term = binom * dpow * Integer(std::to_string(pd.degrees[static_cast<std::size_t>(j)]));
      sum += (j % 2 == 0) ? term : Integer(-term);
    }
    c[static_cast<std::size_t>(k)] = (k % 2 == 1) ? Rational(sum) : Rational(-sum);
  }
  return ChowClass(n, std::move(c));
}

ChowClass segre_of_ideal(const Ideal& ideal, const SegreConfig& config) {
  const EqualizedIdeal eq = equalize_degrees(ideal);
  return segre_class(projective_degrees(eq.ideal, eq.generator_degree, config));
}

}  // namespace cherncalc
