#include "cherncalc/chow.hpp"

#include <algorithm>
#include <sstream>

#include "cherncalc/error.hpp"

namespace cherncalc {

namespace {

void check_same_space(const ChowClass& a, const ChowClass& b) {
  if (a.n() != b.n())
    throw Error(ErrorKind::ring_mismatch, "classes on P^" + std::to_string(a.n()) + " and P^" +
                                              std::to_string(b.n()));
}

}  // namespace

ChowClass::ChowClass(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "ambient dimension must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
}

ChowClass::ChowClass(int n, std::vector<Rational> coeffs) : ChowClass(n) {
  if (coeffs.size() > coeffs_.size())
    throw Error(ErrorKind::invalid_argument,
                "a class on P^" + std::to_string(n) + " has at most " +
                    std::to_string(n + 1) + " coefficients");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

ChowClass ChowClass::one(int n) { return h_power(n, 0); }

ChowClass ChowClass::h_power(int n, int k) {
  ChowClass c(n);
  if (k >= 0 && k <= n) c.coeffs_[static_cast<std::size_t>(k)] = 1;
  return c;
}

ChowClass ChowClass::linear(int n, const Rational& a) {
  ChowClass c = one(n);
  if (n >= 1) c.coeffs_[1] = a;
  return c;
}

bool ChowClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

ChowClass ChowClass::operator-() const {
  ChowClass r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  check_same_space(a, b);
  ChowClass r = a;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) { return a + (-b); }

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  check_same_space(a, b);
  ChowClass r(a.n_);
  const std::size_t len = r.coeffs_.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

ChowClass operator*(const Rational& c, const ChowClass& a) {
  ChowClass r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass result = one(n_);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string ChowClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= n_; ++k) {
    Rational c = (*this)[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str();
    out << "h";
    if (k > 1) out << "^" << k;
  }
  return first ? "0" : out.str();
}

std::string ChowClass::to_point_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= n_; ++k) {
    Rational c = (*this)[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (c != 1) out << c.get_str();
    out << "[P^" << (n_ - k) << "]";
  }
  return first ? "0" : out.str();
}

ChowClass inverse_unit(const ChowClass& a) {
  if (a[0] == 0) throw Error(ErrorKind::invalid_argument, "class with zero constant term is not a unit");
  const int n = a.n();
  std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
  inv[0] = 1 / a[0];
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -s * inv[0];
  }
  return ChowClass(n, std::move(inv));
}

ChowClass dual(const ChowClass& a) {
  std::vector<Rational> c = a.coeffs();
  for (int k = 0; k <= a.n(); ++k)
    if ((a.n() - k) % 2 != 0) c[static_cast<std::size_t>(k)] = -c[static_cast<std::size_t>(k)];
  return ChowClass(a.n(), std::move(c));
}

ChowClass twist(const ChowClass& a, LineBundle bundle) {
  const int n = a.n();
  const ChowClass cl = ChowClass::linear(n, bundle.twist);
  ChowClass result(n);
  ChowClass factor = ChowClass::one(n);  // c(L)^p for p = n - k, built from p = 0 up
  for (int k = n; k >= 0; --k) {
    if (a[k] != 0) result = result + a[k] * (factor * ChowClass::h_power(n, k));
    factor = factor * cl;
  }
  return result;
}

ChowClass dual_twist(const ChowClass& a, LineBundle bundle) { return twist(dual(a), bundle); }

ChowClass ctpn_twisted(int n, long d) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "ctpn_twisted needs n >= 1");
  return ChowClass::linear(n, d - 1).pow(static_cast<unsigned>(n + 1)) *
         inverse_unit(ChowClass::linear(n, d));
}

ChowClass tangent_class(int n) { return ChowClass::linear(n, 1).pow(static_cast<unsigned>(n + 1)); }

Rational degree_component(const ChowClass& a) { return a[a.n()]; }

}  // namespace cherncalc
