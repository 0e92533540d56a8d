#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cherncalc/polynomial.hpp"

namespace cherncalc {

/// Degrevlex, or a block order that compares the first `eliminated`
/// variables by degrevlex before looking at the rest (also degrevlex).
struct MonomialOrder {
  enum class Kind { degrevlex, elimination };

  Kind kind = Kind::degrevlex;
  std::size_t nvars = 0;
  std::size_t eliminated = 0;

  static MonomialOrder degrevlex(std::size_t nvars) {
    return {Kind::degrevlex, nvars, 0};
  }
  static MonomialOrder elimination(std::size_t nvars, std::size_t eliminated) {
    return {Kind::elimination, nvars, eliminated};
  }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

struct GroebnerOptions {
  /// Maximum number of elementary reduction steps for one computation.
  std::uint64_t step_budget = 1'000'000;
  /// Gebauer-Moeller pair pruning instead of the plain two criteria.
  bool gebauer_moeller = false;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading
/// monomial. Immutable once constructed.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<RatPoly> elements);

  const MonomialOrder& order() const { return order_; }
  const std::vector<RatPoly>& elements() const { return elements_; }
  /// Leading monomials under order(), parallel to elements().
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t nvars() const { return order_.nvars; }
  bool is_unit() const;
  bool reduced() const { return true; }

  bool operator==(const GroebnerBasis& other) const;

 private:
  MonomialOrder order_;
  std::vector<RatPoly> elements_;
  std::vector<Monomial> leading_;
};

/// Leading monomial of a nonzero polynomial under an arbitrary order.
Monomial leading_monomial(const RatPoly& p, const MonomialOrder& order);

/// Reduced Groebner basis by Buchberger's algorithm with the normal
/// selection strategy. Throws Error{budget_exceeded} past the step budget.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Fully reduced remainder of p modulo the basis; zero iff p is in the ideal.
RatPoly normal_form(const RatPoly& p, const GroebnerBasis& basis,
                    const GroebnerOptions& options = {});

/// (J : g^infinity) via one extra variable t eliminated from J + (1 - t g).
/// The result is generated by a reduced degrevlex basis.
Ideal saturate(const Ideal& ideal, const RatPoly& g, const GroebnerOptions& options = {});

/// Krull dimension of R/I from the leading-term ideal of a degrevlex basis
/// (largest set of variables containing no leading monomial); -1 if I = (1).
int krull_dimension(const Ideal& ideal, const GroebnerOptions& options = {});

/// Dimension of V(I) in projective space (krull_dimension - 1; -1 if empty).
int projective_dimension(const Ideal& ideal, const GroebnerOptions& options = {});

/// Number of standard monomials of a basis whose ideal is zero-dimensional.
/// Throws Error{not_zero_dimensional} if some variable has no pure power among
/// the leading monomials.
std::uint64_t count_standard_monomials(const GroebnerBasis& basis);

struct DegreeOptions {
  long coordinate_bound = 7;
  int max_retries = 6;
  GroebnerOptions groebner;
};

/// Length of the zero-dimensional projective scheme V(I) in P^n (I homogeneous
/// in n+1 variables); 0 when V(I) is empty. Uses a random chart x0 + sum c_j x_j
/// != 0, checking that no point of V(I) lies on the discarded hyperplane.
std::uint64_t degree_zero_dim(const Ideal& ideal, std::mt19937_64& rng,
                              const DegreeOptions& options = {});

}  // namespace cherncalc
