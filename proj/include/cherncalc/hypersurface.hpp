#pragma once

#include <span>
#include <string>
#include <vector>

#include "cherncalc/chow.hpp"
#include "cherncalc/polynomial.hpp"
#include "cherncalc/segre.hpp"

namespace cherncalc {

/// A component of the normal cone of Y: its support Y_i, with dimension,
/// geometric multiplicity m_i and Chern-Mather class pushed to P^n.
struct ConeComponent {
  std::string label;
  int dimension = 0;
  long multiplicity = 1;
  ChowClass chern_mather;
};

struct HypersurfaceReport {
  int n = 0;
  int degree = 0;
  Ideal singular_ideal;
  /// dim Y; -1 when the hypersurface is nonsingular.
  int singular_dimension = -1;
  ChowClass segre;
  ChowClass weighted_mather;
  ChowClass mu;
  ChowClass fulton;
  ChowClass schwartz_macpherson;
  /// c_SM - c_F.
  ChowClass milnor;
  Rational euler_characteristic;
};

/// Ideal of the nonzero partials dF/dx_i; contains F by the Euler relation.
Ideal singularity_scheme(const RatPoly& f);

/// c(TP^n) cap s(X, P^n) for a degree-d hypersurface: (1+h)^{n+1} d h / (1 + d h).
ChowClass fulton_class(int n, long d);

/// (-1)^{dim Y} dual_twist(ctpn_twisted(n, d) * segre, O(d)).
ChowClass weighted_mather(const ChowClass& segre, long d, int dim_y);

/// (-1)^{dim Y} dual_twist(cwma, O(d)).
ChowClass mu_class(const ChowClass& cwma, long d, int dim_y);

struct CsmAndMilnor {
  ChowClass schwartz_macpherson;
  ChowClass milnor;
};

/// c_SM = c_F + (-1)^{n - dim Y} (1 + d h)^{-1} cwma; milnor = c_SM - c_F.
CsmAndMilnor csm_and_milnor(const ChowClass& fulton, const ChowClass& cwma, long d, int dim_y);

/// sum_i (-1)^{dim Y - dim Y_i} m_i c_Ma(Y_i).
ChowClass assemble_cwma(std::span<const ConeComponent> components, int dim_y);

/// Component of a divisor with normal crossings: reduced degree and multiplicity.
struct CrossingComponent {
  long degree = 1;
  long multiplicity = 1;
};

struct NormalCrossingsResult {
  ChowClass weighted_mather;
  /// All multiplicities 1.
  bool reduced = true;
  /// Some multiplicities are 1 and some are not; the nonreduced sign was used.
  bool mixed = false;
};

/// +-(1+h)^{n+1} (1 - (1 + sum r_i a_i h) / prod (1 + a_i h)), '+' iff reduced.
NormalCrossingsResult normal_crossings_cwma(int n, std::span<const CrossingComponent> components);

/// r c_F(X) + (-1)^{gap} (1 + (r+1) d h) / (1 + d h) cwma(Y'), gap = dim X - dim Y'.
ChowClass residual_cwma(long r, const ChowClass& fulton, const ChowClass& cwma_residual, long d,
                        int dim_gap);

/// Segre class of a singular scheme supported on a smooth curve of genus g and
/// degree r, reduced away from homogeneous points of multiplicities m_i.
ChowClass curve_family_segre(int n, long g, long r, std::span<const long> m);

/// Weighted Chern-Mather class of the same configuration.
ChowClass curve_family_cwma(int n, long g, long r, std::span<const long> m);

/// (n-1)((d-2) r - sum(m_i - 2)) - 4(g + r - 1); zero iff consistent.
Rational claim33_check(int n, long d, long g, long r, std::span<const long> m);

/// weighted_mather(curve_family_segre) - curve_family_cwma; its [P^1] part is
/// always zero and its [P^0] part is minus claim33_check.
ChowClass curve_family_discrepancy(int n, long d, long g, long r, std::span<const long> m);

/// Values of n in [n_min, n_max] admitting some d <= max_degree and some list
/// of at most max_points multiplicities 2 <= m_i <= d with zero residual.
std::vector<int> feasible_curve_dimensions(long g, long r, int n_min, int n_max,
                                           long max_degree = 12, int max_points = 3);

/// Predicted rho_* cwma(Y') = (-1)^{dim X - dim Y} cwma(Y) - (codim - 1) cwma(Z).
ChowClass blowup_prediction(const ChowClass& cwma_y, const ChowClass& cwma_z, int dim_x,
                            int dim_y, int codim);

/// Every class of the hypersurface V(F) in P^n, n = nvars - 1.
HypersurfaceReport full_report(const RatPoly& f, const SegreConfig& config);

}  // namespace cherncalc
