#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace cherncalc {

/// Upper bound on ring size (n + 1 variables plus elimination helpers).
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with cached total degree. Unused slots stay zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  friend bool divides(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && exps_ == other.exps_;
  }

  /// Moves variable i to slot i + offset (towards higher indices).
  Monomial shifted(std::size_t offset) const;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  unsigned degree_ = 0;
};

/// Degree reverse lexicographic comparison on the first nvars variables,
/// x0 > x1 > ... Returns <0, 0, >0.
int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t begin,
                      std::size_t end);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cherncalc
