#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cherncalc/rational.hpp"

namespace cherncalc {

/// O(l) on P^n, so c_1 = l h.
struct LineBundle {
  long twist = 0;
};

/// A class in A_*(P^n), stored as sum_k c_k h^k with h^k <-> [P^{n-k}].
///
/// Exactly n+1 coefficients; products truncate past h^n. The dimension-p
/// piece is coefficient n-p.
class ChowClass {
 public:
  ChowClass() = default;
  /// The zero class of P^n.
  explicit ChowClass(int n);
  /// Missing trailing coefficients are zero; extra ones are an error.
  ChowClass(int n, std::vector<Rational> coeffs);

  static ChowClass one(int n);
  /// h^k (zero when k > n).
  static ChowClass h_power(int n, int k);
  /// 1 + a h.
  static ChowClass linear(int n, const Rational& a);
  /// [P^k] = h^{n-k}.
  static ChowClass point_class(int n, int k) { return h_power(n, n - k); }

  int n() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  /// Coefficient of [P^p].
  const Rational& dimension_piece(int p) const { return (*this)[n_ - p]; }
  bool is_zero() const;

  ChowClass operator-() const;
  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const Rational& c, const ChowClass& a);
  ChowClass pow(unsigned e) const;
  bool operator==(const ChowClass& other) const = default;

  /// "3h + h^2"; "0" for the zero class.
  std::string to_string() const;
  /// "3[P^1] + [P^0]".
  std::string to_point_string() const;

 private:
  int n_ = 0;
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse of a class with nonzero constant term.
ChowClass inverse_unit(const ChowClass& a);

/// a_dual: the dimension-p piece times (-1)^p.
ChowClass dual(const ChowClass& a);

/// a_L: the dimension-p piece times c(L)^p.
ChowClass twist(const ChowClass& a, LineBundle bundle);

/// twist(dual(a), L); an involution for every L.
ChowClass dual_twist(const ChowClass& a, LineBundle bundle);

/// c(T*P^n (x) O(d)) = (1 + (d-1)h)^{n+1} / (1 + d h).
ChowClass ctpn_twisted(int n, long d);

/// c(TP^n) = (1 + h)^{n+1}.
ChowClass tangent_class(int n);

/// Coefficient of h^n, i.e. the degree of the zero-dimensional part.
Rational degree_component(const ChowClass& a);

}  // namespace cherncalc
