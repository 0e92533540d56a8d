#pragma once

#include <cstdint>
#include <vector>

#include "cherncalc/chow.hpp"
#include "cherncalc/groebner.hpp"
#include "cherncalc/polynomial.hpp"

namespace cherncalc {

/// Degrees g_0..g_n of the rational map P^n --> P^r given by generators of a
/// common degree d'.
struct ProjectiveDegrees {
  long generator_degree = 0;
  std::vector<std::uint64_t> degrees;

  int n() const { return static_cast<int>(degrees.size()) - 1; }
  bool operator==(const ProjectiveDegrees&) const = default;
};

struct SegreConfig {
  std::uint64_t seed = 0;
  long bound = 1009;
  int trials = 5;
  bool parallel = true;
  GroebnerOptions groebner;
  DegreeOptions degree;
};

/// Pads lower-degree generators by every monomial of the missing degree.
/// Returns the equalized ideal; its common degree is generator_degree.
struct EqualizedIdeal {
  Ideal ideal;
  long generator_degree = 0;
};
EqualizedIdeal equalize_degrees(const Ideal& ideal);

/// One Monte Carlo draw: g_i = deg((P_1..P_i, L_1..L_{n-i}) : P_0^inf) with
/// P_j random combinations of the generators and L_j random linear forms,
/// each g_i on its own substream of `seed`.
ProjectiveDegrees projective_degrees_draw(const Ideal& ideal, long generator_degree,
                                          std::uint64_t seed, const SegreConfig& config);

/// Repeats independent draws until two agree; throws
/// Error{monte_carlo_disagreement} after config.trials draws. Draws whose
/// sections turn out non-generic count as failed.
ProjectiveDegrees projective_degrees(const Ideal& ideal, long generator_degree,
                                     const SegreConfig& config);

/// Pushforward of s(Y, P^n) from projective degrees: coefficient of h^k is
/// (-1)^{k-1} sum_j C(k,j) d'^{k-j} (-1)^j g_j for k >= 1, and 0 for k = 0.
ChowClass segre_class(const ProjectiveDegrees& pd);

/// s(V(I), P^n) pushed to P^n for a homogeneous ideal with V(I) != P^n.
ChowClass segre_of_ideal(const Ideal& ideal, const SegreConfig& config);

}  // namespace cherncalc
