#include "cherncalc/hypersurface.hpp"

#include <functional>

#include "cherncalc/error.hpp"
#include "cherncalc/groebner.hpp"

namespace cherncalc {

namespace {

Rational sign(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational power(const Rational& base, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// r [P^1] + c [P^0] on P^n.
ChowClass curve_class(int n, long r, const Rational& c) {
  return Rational(r) * ChowClass::point_class(n, 1) + c * ChowClass::point_class(n, 0);
}

void check_curve_args(int n, long r, std::span<const long> m) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "curve family needs n >= 2");
  if (r < 1) throw Error(ErrorKind::invalid_argument, "curve degree must be >= 1");
  for (long mi : m)
    if (mi < 2) throw Error(ErrorKind::invalid_argument, "point multiplicities must be >= 2");
}

}  // namespace

Ideal singularity_scheme(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::invalid_argument, "zero polynomial");
  euler_check(f);
  if (f.degree() < 1) throw Error(ErrorKind::invalid_argument, "constant polynomial");
  std::vector<RatPoly> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    RatPoly p = partial(f, i);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return Ideal(f.nvars(), std::move(gens));
}

ChowClass fulton_class(int n, long d) {
  if (d < 1) throw Error(ErrorKind::invalid_argument, "degree must be >= 1");
  ChowClass x = Rational(d) * ChowClass::h_power(n, 1);
  return tangent_class(n) * x * inverse_unit(ChowClass::linear(n, d));
}

ChowClass weighted_mather(const ChowClass& segre, long d, int dim_y) {
  return sign(dim_y) * dual_twist(ctpn_twisted(segre.n(), d) * segre, LineBundle{d});
}

ChowClass mu_class(const ChowClass& cwma, long d, int dim_y) {
  return sign(dim_y) * dual_twist(cwma, LineBundle{d});
}

CsmAndMilnor csm_and_milnor(const ChowClass& fulton, const ChowClass& cwma, long d, int dim_y) {
  const int n = fulton.n();
  ChowClass correction = inverse_unit(ChowClass::linear(n, d)) * cwma;
  ChowClass csm = fulton + sign(n - dim_y) * correction;
  return {csm, csm - fulton};
}

ChowClass assemble_cwma(std::span<const ConeComponent> components, int dim_y) {
  if (components.empty()) throw Error(ErrorKind::invalid_argument, "no cone components");
  ChowClass total(components.front().chern_mather.n());
  for (const auto& c : components) {
    if (c.multiplicity < 1)
      throw Error(ErrorKind::invalid_argument, "multiplicity of " + c.label + " must be >= 1");
    if (c.dimension > dim_y)
      throw Error(ErrorKind::invalid_argument, c.label + " has dimension above dim Y");
    total = total + sign(dim_y - c.dimension) * Rational(c.multiplicity) * c.chern_mather;
  }
  return total;
}

NormalCrossingsResult normal_crossings_cwma(int n, std::span<const CrossingComponent> components) {
  NormalCrossingsResult out;
  Rational divisor = 0;
  ChowClass product = ChowClass::one(n);
  bool any_reduced = false;
  for (const auto& c : components) {
    if (c.degree < 1 || c.multiplicity < 1)
      throw Error(ErrorKind::invalid_argument, "component degree and multiplicity must be >= 1");
    divisor += Rational(c.multiplicity * c.degree);
    product = product * ChowClass::linear(n, c.degree);
    if (c.multiplicity == 1)
      any_reduced = true;
    else
      out.reduced = false;
  }
  out.mixed = !out.reduced && any_reduced;
  ChowClass inner = ChowClass::one(n) - ChowClass::linear(n, divisor) * inverse_unit(product);
  out.weighted_mather = (out.reduced ? Rational(1) : Rational(-1)) * (tangent_class(n) * inner);
  return out;
}

ChowClass residual_cwma(long r, const ChowClass& fulton, const ChowClass& cwma_residual, long d,
                        int dim_gap) {
  if (r < 0) throw Error(ErrorKind::invalid_argument, "r must be >= 0");
  const int n = fulton.n();
  ChowClass ratio = ChowClass::linear(n, (r + 1) * d) * inverse_unit(ChowClass::linear(n, d));
  return Rational(r) * fulton + sign(dim_gap) * (ratio * cwma_residual);
}

ChowClass curve_family_segre(int n, long g, long r, std::span<const long> m) {
  check_curve_args(n, r, m);
  const long s = static_cast<long>(m.size());
  Rational c = Rational(s * (n - 1) + 2 - 2 * g - r * (n + 1));
  for (long mi : m) c += power(mi - 1, n) - Rational(n * (mi - 1));
  return curve_class(n, r, c);
}

ChowClass curve_family_cwma(int n, long g, long r, std::span<const long> m) {
  check_curve_args(n, r, m);
  Rational c = Rational(2 - 2 * g);
  for (long mi : m) c -= power(mi - 1, n) - Rational(mi - 1);
  return curve_class(n, r, c);
}

Rational claim33_check(int n, long d, long g, long r, std::span<const long> m) {
  check_curve_args(n, r, m);
  long points = 0;
  for (long mi : m) points += mi - 2;
  return Rational(n - 1) * Rational((d - 2) * r - points) - Rational(4 * (g + r - 1));
}

ChowClass curve_family_discrepancy(int n, long d, long g, long r, std::span<const long> m) {
  return weighted_mather(curve_family_segre(n, g, r, m), d, 1) - curve_family_cwma(n, g, r, m);
}

std::vector<int> feasible_curve_dimensions(long g, long r, int n_min, int n_max, long max_degree,
                                           int max_points) {
  std::vector<int> out;
  for (int n = std::max(n_min, 2); n <= n_max; ++n) {
    bool found = false;
    for (long d = 2; d <= max_degree && !found; ++d) {
      std::vector<long> m;
      // nondecreasing lists of multiplicities in [2, d]
      std::function<void(long)> search = [&](long lo) {
        if (found) return;
        if (claim33_check(n, d, g, r, m) == 0) {
          found = true;
          return;
        }
        if (static_cast<int>(m.size()) == max_points) return;
        for (long mi = lo; mi <= d && !found; ++mi) {
          m.push_back(mi);
          search(mi);
          m.pop_back();
        }
      };
      search(2);
    }
    if (found) out.push_back(n);
  }
  return out;
}

ChowClass blowup_prediction(const ChowClass& cwma_y, const ChowClass& cwma_z, int dim_x,
                            int dim_y, int codim) {
  if (codim < 2) throw Error(ErrorKind::invalid_argument, "codimension must be >= 2");
  return sign(dim_x - dim_y) * cwma_y - Rational(codim - 1) * cwma_z;
}

HypersurfaceReport full_report(const RatPoly& f, const SegreConfig& config) {
  HypersurfaceReport rep;
  rep.singular_ideal = singularity_scheme(f);
  rep.n = static_cast<int>(f.nvars()) - 1;
  rep.degree = static_cast<int>(f.degree());
  rep.singular_dimension = projective_dimension(rep.singular_ideal, config.groebner);
  rep.segre = segre_of_ideal(rep.singular_ideal, config);
  rep.weighted_mather = weighted_mather(rep.segre, rep.degree, rep.singular_dimension);
  rep.mu = mu_class(rep.weighted_mather, rep.degree, rep.singular_dimension);
  rep.fulton = fulton_class(rep.n, rep.degree);
  auto [csm, milnor] =
      csm_and_milnor(rep.fulton, rep.weighted_mather, rep.degree, rep.singular_dimension);
  rep.schwartz_macpherson = csm;
  rep.milnor = milnor;
  rep.euler_characteristic = degree_component(csm);
  return rep;
}

}  // namespace cherncalc
