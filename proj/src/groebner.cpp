#include "cherncalc/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "cherncalc/error.hpp"

namespace cherncalc {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::elimination && eliminated > 0) {
    const int head = degrevlex_compare(a, b, 0, eliminated);
    if (head != 0) return head;
    return degrevlex_compare(a, b, eliminated, nvars);
  }
  return degrevlex_compare(a, b, 0, nvars);
}

namespace {

using Terms = std::vector<Term>;

/// Counts reduction steps and enforces the budget.
class StepCounter {
 public:
  explicit StepCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++steps_ > budget_)
      throw Error(ErrorKind::budget_exceeded,
                  "Groebner computation exceeded its budget of " + std::to_string(budget_) +
                      " reduction steps");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

Terms to_ordered(const RatPoly& p, const MonomialOrder& order) {
  Terms t = p.terms();
  if (order.kind != MonomialOrder::Kind::degrevlex)
    std::sort(t.begin(), t.end(), [&order](const Term& a, const Term& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  return t;
}

RatPoly from_ordered(Terms t, std::size_t nvars) {
  return RatPoly::from_terms(nvars, std::move(t));
}

void make_monic(Terms& p) {
  if (p.empty() || p.front().coeff == 1) return;
  const Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

/// p[start..] - c * m * g, all sorted decreasing under order.
Terms sub_mul(const Terms& p, std::size_t start, const Rational& c, const Monomial& m,
              const Terms& g, const MonomialOrder& order) {
  Terms r;
  r.reserve(p.size() - start + g.size());
  std::size_t i = start, j = 0;
  while (i < p.size() && j < g.size()) {
    const Monomial gm = g[j].monomial * m;
    const int cmp = order.compare(p[i].monomial, gm);
    if (cmp > 0) {
      r.push_back(p[i++]);
    } else if (cmp < 0) {
      r.push_back({gm, -c * g[j].coeff});
      ++j;
    } else {
      Rational s = p[i].coeff - c * g[j].coeff;
      if (s != 0) r.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) r.push_back(p[i]);
  for (; j < g.size(); ++j) r.push_back({g[j].monomial * m, -c * g[j].coeff});
  return r;
}

/// Full reduction of p by monic divisors (skipping index `skip`).
Terms reduce(Terms p, const std::vector<Terms>& basis, const MonomialOrder& order,
             StepCounter& steps, std::size_t skip = static_cast<std::size_t>(-1)) {
  Terms remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lead = p[start];
    std::optional<std::size_t> divisor;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (divides(basis[k].front().monomial, lead.monomial)) {
        divisor = k;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(lead);
      ++start;
      continue;
    }
    steps.tick();
    const Terms& g = basis[*divisor];
    const Rational c = lead.coeff / g.front().coeff;
    const Monomial m = lead.monomial / g.front().monomial;
    p = sub_mul(p, start, c, m, g, order);
    start = 0;
  }
  return remainder;
}

Terms s_polynomial(const Terms& f, const Terms& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.front().monomial, g.front().monomial);
  // both monic: S = (l/lm f) f - (l/lm g) g
  Terms a;
  a.reserve(f.size());
  const Monomial mf = l / f.front().monomial;
  for (const auto& t : f) a.push_back({t.monomial * mf, t.coeff});
  return sub_mul(a, 1, 1, l / g.front().monomial, Terms(g.begin() + 1, g.end()), order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerOptions& options)
      : order_(order), options_(options), steps_(options.step_budget) {}

  void add_generator(const RatPoly& f) {
    Terms r = reduce(to_ordered(f, order_), basis_, order_, steps_);
    if (!r.empty()) insert(std::move(r));
  }

  void run() {
    while (!pairs_.empty()) {
      const std::size_t pick = select_pair();
      const Pair pr = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      done_[pr.i][pr.j] = done_[pr.j][pr.i] = true;
      if (!options_.gebauer_moeller && skip_by_criteria(pr)) continue;
      Terms s = s_polynomial(basis_[pr.i], basis_[pr.j], order_);
      Terms r = reduce(std::move(s), basis_, order_, steps_);
      if (!r.empty()) insert(std::move(r));
    }
  }

  std::vector<RatPoly> reduced_basis() {
    std::vector<std::size_t> idx(basis_.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
      return order_.compare(basis_[a].front().monomial, basis_[b].front().monomial) < 0;
    });
    std::vector<Terms> minimal;
    for (std::size_t k : idx) {
      const Monomial& lm = basis_[k].front().monomial;
      const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&lm](const Terms& g) {
        return divides(g.front().monomial, lm);
      });
      if (!redundant) minimal.push_back(basis_[k]);
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Terms tail(minimal[k].begin() + 1, minimal[k].end());
      Terms reduced_tail = reduce(std::move(tail), minimal, order_, steps_, k);
      Terms full;
      full.reserve(reduced_tail.size() + 1);
      full.push_back(minimal[k].front());
      for (auto& t : reduced_tail) full.push_back(std::move(t));
      make_monic(full);
      minimal[k] = std::move(full);
    }
    std::vector<RatPoly> out;
    out.reserve(minimal.size());
    for (auto& g : minimal) out.push_back(from_ordered(std::move(g), order_.nvars));
    return out;
  }

 private:
  void insert(Terms r) {
    make_monic(r);
    const std::size_t t = basis_.size();
    basis_.push_back(std::move(r));
    for (auto& row : done_) row.push_back(false);
    done_.emplace_back(basis_.size(), false);
    const Monomial& lt = basis_[t].front().monomial;
    if (options_.gebauer_moeller) {
      gebauer_moeller_update(t);
      return;
    }
    for (std::size_t k = 0; k < t; ++k)
      pairs_.push_back({k, t, lcm(basis_[k].front().monomial, lt)});
  }

  void gebauer_moeller_update(std::size_t t) {
    const Monomial& lt = basis_[t].front().monomial;
    // Old pairs made redundant by the new element (criterion B).
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!divides(lt, p.lcm)) return false;
      const Monomial li = lcm(basis_[p.i].front().monomial, lt);
      const Monomial lj = lcm(basis_[p.j].front().monomial, lt);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < t; ++k)
      fresh.push_back({k, t, lcm(basis_[k].front().monomial, lt)});
    // Criterion M: drop pairs whose lcm is a proper multiple of another's.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b)
        if (a != b && divides(fresh[b].lcm, fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
          keep[a] = false;
    // Criterion F plus the product criterion, per group of equal lcm.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool any_coprime = false;
      for (std::size_t b = a; b < fresh.size(); ++b)
        if (keep[b] && fresh[b].lcm == fresh[a].lcm &&
            coprime(basis_[fresh[b].i].front().monomial, lt))
          any_coprime = true;
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (fresh[b].lcm == fresh[a].lcm) keep[b] = false;
      if (any_coprime) keep[a] = false;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs_.push_back(fresh[a]);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && std::pair(pairs_[k].j, pairs_[k].i) <
                                  std::pair(pairs_[best].j, pairs_[best].i)))
        best = k;
    }
    return best;
  }

  bool skip_by_criteria(const Pair& p) const {
    if (coprime(basis_[p.i].front().monomial, basis_[p.j].front().monomial)) return true;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(basis_[k].front().monomial, p.lcm) && done_[p.i][k] && done_[p.j][k])
        return true;
    }
    return false;
  }

  MonomialOrder order_;
  GroebnerOptions options_;
  StepCounter steps_;
  std::vector<Terms> basis_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> done_;
};

RatPoly drop_leading_variable(const RatPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 1; i < p.nvars(); ++i) m.set(i - 1, t.monomial[i]);
    terms.push_back({m, t.coeff});
  }
  return RatPoly::from_terms(p.nvars() - 1, std::move(terms));
}

}  // namespace

Monomial leading_monomial(const RatPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(ErrorKind::invalid_argument, "zero has no leading monomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return best->monomial;
}

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<RatPoly> elements)
    : order_(order), elements_(std::move(elements)) {
  leading_.reserve(elements_.size());
  for (const auto& e : elements_) {
    if (e.nvars() != order_.nvars)
      throw Error(ErrorKind::ring_mismatch, "basis element outside the order's ring");
    leading_.push_back(leading_monomial(e, order_));
  }
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leading_.begin(), leading_.end(),
                     [](const Monomial& m) { return m.is_one(); });
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  return order_ == other.order_ && elements_ == other.elements_;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (ideal.nvars() != order.nvars)
    throw Error(ErrorKind::ring_mismatch, "ideal and monomial order disagree on the ring");
  Buchberger engine(order, options);
  for (const auto& g : ideal.generators()) engine.add_generator(g);
  engine.run();
  return GroebnerBasis(order, engine.reduced_basis());
}

RatPoly normal_form(const RatPoly& p, const GroebnerBasis& basis,
                    const GroebnerOptions& options) {
  if (p.nvars() != basis.nvars())
    throw Error(ErrorKind::ring_mismatch, "normal form across different rings");
  std::vector<Terms> divisors;
  divisors.reserve(basis.elements().size());
  for (const auto& g : basis.elements()) {
    Terms t = to_ordered(g, basis.order());
    make_monic(t);
    divisors.push_back(std::move(t));
  }
  StepCounter steps(options.step_budget);
  return from_ordered(reduce(to_ordered(p, basis.order()), divisors, basis.order(), steps),
                      p.nvars());
}

Ideal saturate(const Ideal& ideal, const RatPoly& g, const GroebnerOptions& options) {
  if (g.is_zero()) throw Error(ErrorKind::invalid_argument, "cannot saturate by zero");
  if (g.nvars() != ideal.nvars())
    throw Error(ErrorKind::ring_mismatch, "saturating element lives in another ring");
  const std::size_t n = ideal.nvars() + 1;
  if (n > kMaxVars) throw Error(ErrorKind::invalid_argument, "too many variables to saturate");
  std::vector<RatPoly> gens;
  gens.reserve(ideal.size() + 1);
  for (const auto& f : ideal.generators()) gens.push_back(f.embed(n, 1));
  gens.push_back(RatPoly::constant(n, 1) - RatPoly::variable(n, 0) * g.embed(n, 1));
  const GroebnerBasis gb =
      buchberger(Ideal(n, std::move(gens)), MonomialOrder::elimination(n, 1), options);
  std::vector<RatPoly> kept;
  for (std::size_t k = 0; k < gb.elements().size(); ++k)
    if (gb.leading_monomials()[k][0] == 0) kept.push_back(drop_leading_variable(gb.elements()[k]));
  return Ideal(ideal.nvars(), std::move(kept));
}

int krull_dimension(const Ideal& ideal, const GroebnerOptions& options) {
  const GroebnerBasis gb = buchberger(ideal, MonomialOrder::degrevlex(ideal.nvars()), options);
  if (gb.is_unit()) return -1;
  const std::size_t n = ideal.nvars();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    const bool independent =
        std::none_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                     [&](const Monomial& m) {
                       for (std::size_t i = 0; i < n; ++i)
                         if (m[i] != 0 && !(mask & (1u << i))) return false;
                       return true;
                     });
    if (independent) best = size;
  }
  return best;
}

int projective_dimension(const Ideal& ideal, const GroebnerOptions& options) {
  const int k = krull_dimension(ideal, options);
  return k <= 0 ? -1 : k - 1;
}

std::uint64_t count_standard_monomials(const GroebnerBasis& basis) {
  if (basis.is_unit()) return 0;
  const std::size_t n = basis.nvars();
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : basis.leading_monomials()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0 && m.degree() == m[i] && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0)
      throw Error(ErrorKind::not_zero_dimensional,
                  "quotient is infinite-dimensional: no pure power of x" + std::to_string(i) +
                      " among the leading monomials");
  std::uint64_t count = 0;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const bool standard =
          std::none_of(basis.leading_monomials().begin(), basis.leading_monomials().end(),
                       [&m](const Monomial& lm) { return divides(lm, m); });
      if (standard) ++count;
      return;
    }
    for (unsigned e = 0; e < bound[i]; ++e) {
      m.set(i, e);
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  rec(rec, 0);
  return count;
}

std::uint64_t degree_zero_dim(const Ideal& ideal, std::mt19937_64& rng,
                              const DegreeOptions& options) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorKind::not_homogeneous, "projective degree needs a homogeneous ideal");
  const std::size_t nv = ideal.nvars();
  if (nv <= 1) return 0;  // P^0: nonzero forms never vanish at the point
  const std::size_t n = nv - 1;
  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    std::vector<Rational> c(n);
    for (auto& ci : c) ci = draw_int(rng, -options.coordinate_bound, options.coordinate_bound);
    // x0 = y0 - sum c_j y_j, x_j = y_j; then restrict to y0 = 1 or y0 = 0.
    auto images_for = [&](const Rational& y0) {
      std::vector<RatPoly> images;
      RatPoly first = RatPoly::constant(n, y0);
      for (std::size_t j = 0; j < n; ++j) first = first - c[j] * RatPoly::variable(n, j);
      images.push_back(std::move(first));
      for (std::size_t j = 0; j < n; ++j) images.push_back(RatPoly::variable(n, j));
      return images;
    };
    auto transformed = [&](const Rational& y0) {
      const auto images = images_for(y0);
      std::vector<RatPoly> gens;
      for (const auto& f : ideal.generators()) {
        RatPoly g = f.substitute(images);
        if (!g.is_zero()) gens.push_back(std::move(g));
      }
      return gens;
    };
    auto affine_gens = transformed(1);
    if (affine_gens.empty())
      throw Error(ErrorKind::not_zero_dimensional, "ideal vanishes on a whole chart");
    const GroebnerBasis affine =
        buchberger(Ideal(n, std::move(affine_gens)), MonomialOrder::degrevlex(n), options.groebner);
    const std::uint64_t count = count_standard_monomials(affine);
    auto infinity_gens = transformed(0);
    bool clean = false;
    if (!infinity_gens.empty()) {
      const GroebnerBasis at_infinity = buchberger(Ideal(n, std::move(infinity_gens)),
                                                   MonomialOrder::degrevlex(n), options.groebner);
      clean = at_infinity.is_unit();
      if (!clean) {
        try {
          count_standard_monomials(at_infinity);
          clean = true;  // only the irrelevant ideal survives: no projective points
        } catch (const Error&) {
          clean = false;
        }
      }
    }
    if (clean) return count;
  }
  throw Error(ErrorKind::unlucky_coordinates,
              "every random chart met V(I) at infinity after " +
                  std::to_string(options.max_retries) + " attempts");
}

}  // namespace cherncalc
