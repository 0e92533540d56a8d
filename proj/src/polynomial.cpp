#include "cherncalc/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "cherncalc/error.hpp"

namespace cherncalc {

namespace {

bool term_greater(std::size_t nvars, const Monomial& a, const Monomial& b) {
  return degrevlex_compare(a, b, 0, nvars) > 0;
}

void check_same_ring(const RatPoly& p, const RatPoly& q) {
  if (p.nvars() != q.nvars())
    throw Error(ErrorKind::ring_mismatch,
                "polynomials live in rings with " + std::to_string(p.nvars()) +
                    " and " + std::to_string(q.nvars()) + " variables");
}

}  // namespace

RatPoly RatPoly::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Monomial{}, c);
}

RatPoly RatPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw Error(ErrorKind::invalid_argument,
                "variable index " + std::to_string(index) + " out of range");
  return monomial(nvars, Monomial::variable(index));
}

RatPoly RatPoly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  if (nvars > kMaxVars)
    throw Error(ErrorKind::invalid_argument, "too many variables");
  RatPoly p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

RatPoly RatPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  if (nvars > kMaxVars)
    throw Error(ErrorKind::invalid_argument, "too many variables");
  std::sort(terms.begin(), terms.end(), [nvars](const Term& a, const Term& b) {
    return term_greater(nvars, a.monomial, b.monomial);
  });
  RatPoly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool RatPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int RatPoly::degree() const {
  // Degrevlex is degree-compatible, so the leading term has top degree.
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

bool RatPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

std::size_t RatPoly::support_width() const {
  std::size_t w = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] != 0) w = std::max(w, i + 1);
  return w;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
  check_same_ring(p, q);
  RatPoly r(p.nvars_);
  r.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() && j != q.terms_.end()) {
    const int c = degrevlex_compare(i->monomial, j->monomial, 0, p.nvars_);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (s != 0) r.terms_.push_back({i->monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, p.terms_.end());
  r.terms_.insert(r.terms_.end(), j, q.terms_.end());
  return r;
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) { return p + (-q); }

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
  check_same_ring(p, q);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return RatPoly::from_terms(p.nvars_, std::move(terms));
}

RatPoly operator*(const Rational& c, const RatPoly& p) {
  if (c == 0) return RatPoly(p.nvars_);
  RatPoly r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly result = constant(nvars_, 1);
  RatPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

RatPoly RatPoly::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return RatPoly(nvars_);
  RatPoly r(nvars_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

bool RatPoly::operator==(const RatPoly& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

RatPoly RatPoly::embed(std::size_t nvars, std::size_t offset) const {
  if (nvars_ + offset > nvars)
    throw Error(ErrorKind::ring_mismatch, "embedding into a smaller ring");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial.shifted(offset), t.coeff});
  return from_terms(nvars, std::move(terms));
}

RatPoly RatPoly::substitute(std::span<const RatPoly> images) const {
  if (images.size() != nvars_)
    throw Error(ErrorKind::ring_mismatch, "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target)
      throw Error(ErrorKind::ring_mismatch, "substitution images in different rings");
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<RatPoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const RatPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  RatPoly result(target);
  for (const auto& t : terms_) {
    RatPoly piece = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] != 0) piece = piece * power(i, t.monomial[i]);
    result = result + piece;
  }
  return result;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool one = c == 1;
    if (!one || t.monomial.is_one()) out << c.get_str();
    bool star = !one;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (star) out << "*";
      out << "x" << i;
      if (e > 1) out << "^" << e;
      star = true;
    }
  }
  return out.str();
}

RatPoly partial(const RatPoly& p, std::size_t index) {
  if (index >= p.nvars())
    throw Error(ErrorKind::invalid_argument,
                "partial derivative index " + std::to_string(index) + " out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return RatPoly::from_terms(p.nvars(), std::move(terms));
}

bool euler_check(const RatPoly& f) {
  if (!f.is_homogeneous())
    throw Error(ErrorKind::not_homogeneous, "Euler relation needs a homogeneous form");
  if (f.is_zero()) return true;
  RatPoly lhs(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i)
    lhs = lhs + RatPoly::variable(f.nvars(), i) * partial(f, i);
  return lhs == Rational(f.degree()) * f;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // Enumerate exponent vectors recursively over the first nvars - 1 slots;
  // the last slot takes the remainder.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [nvars](const Monomial& a, const Monomial& b) {
    return degrevlex_compare(a, b, 0, nvars) > 0;
  });
  return out;
}

Ideal::Ideal(std::size_t nvars, std::vector<RatPoly> generators)
    : nvars_(nvars), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.nvars() != nvars_)
      throw Error(ErrorKind::ring_mismatch, "ideal generator in a different ring");
    if (g.is_zero())
      throw Error(ErrorKind::invalid_argument, "zero is not allowed as an ideal generator");
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const RatPoly& g) { return g.is_homogeneous(); });
}

long draw_int(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw Error(ErrorKind::invalid_argument, "empty draw range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and library independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

RatPoly random_combination(std::span<const RatPoly> gens, long bound,
                           std::mt19937_64& rng) {
  if (gens.empty())
    throw Error(ErrorKind::invalid_argument, "random combination of an empty list");
  if (bound < 1) throw Error(ErrorKind::invalid_argument, "coefficient bound must be >= 1");
  const int d = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != d || g.nvars() != gens.front().nvars())
      throw Error(ErrorKind::invalid_argument,
                  "random combination needs generators of one common degree");
  RatPoly sum(gens.front().nvars());
  for (const auto& g : gens) sum = sum + Rational(draw_int(rng, -bound, bound)) * g;
  return sum;
}

RatPoly random_linear_form(std::size_t nvars, long bound, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < nvars; ++i)
    terms.push_back({Monomial::variable(i), Rational(draw_int(rng, -bound, bound))});
  return RatPoly::from_terms(nvars, std::move(terms));
}

}  // namespace cherncalc
