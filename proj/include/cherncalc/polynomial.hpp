#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cherncalc/monomial.hpp"
#include "cherncalc/rational.hpp"

namespace cherncalc {

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Exact polynomial in variables x0..x{nvars-1} over Q.
///
/// Terms are kept sorted strictly decreasing in degrevlex and never carry a
/// zero coefficient, so two equal polynomials have identical term vectors.
/// Values are immutable once built; every operation returns a new value.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::size_t nvars) : nvars_(nvars) {}

  static RatPoly constant(std::size_t nvars, const Rational& c);
  static RatPoly variable(std::size_t nvars, std::size_t index);
  static RatPoly monomial(std::size_t nvars, const Monomial& m,
                          const Rational& c = 1);
  /// Collects like terms, drops zeros and sorts.
  static RatPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  /// Degrevlex leading term; requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for zero and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;
  /// Highest variable index used plus one (0 for constants).
  std::size_t support_width() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& p, const RatPoly& q);
  friend RatPoly operator-(const RatPoly& p, const RatPoly& q);
  friend RatPoly operator*(const RatPoly& p, const RatPoly& q);
  friend RatPoly operator*(const Rational& c, const RatPoly& p);
  RatPoly pow(unsigned e) const;
  RatPoly mul_term(const Monomial& m, const Rational& c) const;

  bool operator==(const RatPoly& other) const;

  /// Embeds into a ring with more variables, shifting indices by offset.
  RatPoly embed(std::size_t nvars, std::size_t offset = 0) const;

  /// Substitutes images[i] for x_i; all images share one ring.
  RatPoly substitute(std::span<const RatPoly> images) const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to x_index.
RatPoly partial(const RatPoly& p, std::size_t index);

/// Checks sum_i x_i dF/dx_i == deg(F) * F. Throws on non-homogeneous input.
bool euler_check(const RatPoly& f);

/// Every monomial of the given degree in nvars variables, degrevlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Finitely generated ideal; generator order is preserved.
class Ideal {
 public:
  Ideal() = default;
  /// Throws Error{invalid_argument} on zero generators or mixed rings.
  Ideal(std::size_t nvars, std::vector<RatPoly> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<RatPoly>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_homogeneous() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<RatPoly> generators_;
};

/// Draws an integer uniformly from [lo, hi]. Portable across standard
/// libraries (only the mt19937_64 output sequence is relied upon).
long draw_int(std::mt19937_64& rng, long lo, long hi);

/// Deterministic RNG for substream `stream` of a master seed.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream);

/// sum_i c_i gens_i with c_i uniform in [-bound, bound].
/// Requires nonempty gens of a common degree and bound >= 1.
RatPoly random_combination(std::span<const RatPoly> gens, long bound,
                           std::mt19937_64& rng);

/// Random linear form with coefficients in [-bound, bound].
RatPoly random_linear_form(std::size_t nvars, long bound,
                           std::mt19937_64& rng);

}  // namespace cherncalc
