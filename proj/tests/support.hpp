#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "cherncalc/chow.hpp"
#include "cherncalc/poly_parser.hpp"
#include "cherncalc/polynomial.hpp"

namespace test {

inline cherncalc::RatPoly P(const std::string& text, std::size_t nvars) {
  return cherncalc::parse_polynomial(text, nvars);
}

inline cherncalc::Ideal I(std::size_t nvars, std::initializer_list<const char*> gens) {
  std::vector<cherncalc::RatPoly> v;
  for (const char* g : gens) v.push_back(P(g, nvars));
  return cherncalc::Ideal(nvars, std::move(v));
}

inline cherncalc::ChowClass C(int n, std::initializer_list<long> coeffs) {
  std::vector<cherncalc::Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return cherncalc::ChowClass(n, std::move(v));
}

inline cherncalc::ChowClass random_class(int n, std::mt19937_64& rng, long bound = 9) {
  std::vector<cherncalc::Rational> v;
  for (int k = 0; k <= n; ++k) {
    cherncalc::Rational q(cherncalc::draw_int(rng, -bound, bound),
                          cherncalc::draw_int(rng, 1, 4));
    q.canonicalize();
    v.push_back(q);
  }
  return cherncalc::ChowClass(n, std::move(v));
}

inline cherncalc::RatPoly random_poly(std::size_t nvars, unsigned max_degree, int terms,
                                      std::mt19937_64& rng) {
  std::vector<cherncalc::Term> t;
  for (int i = 0; i < terms; ++i) {
    cherncalc::Monomial m;
    unsigned left = static_cast<unsigned>(cherncalc::draw_int(rng, 0, max_degree));
    for (std::size_t v = 0; v < nvars && left > 0; ++v) {
      const auto e = static_cast<unsigned>(cherncalc::draw_int(rng, 0, left));
      m.set(v, e);
      left -= e;
    }
    cherncalc::Rational c(cherncalc::draw_int(rng, -5, 5), cherncalc::draw_int(rng, 1, 3));
    c.canonicalize();
    t.push_back({m, c});
  }
  return cherncalc::RatPoly::from_terms(nvars, std::move(t));
}

}  // namespace test
