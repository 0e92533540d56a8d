#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherncalc/chow.hpp"
#include "cherncalc/rational.hpp"

namespace cherncalc {

struct Stratum {
  std::string label;
  int dimension = 0;
};

/// Strata with the closure order, stored transitively closed.
class StrataPoset {
 public:
  StrataPoset() = default;
  /// `closure` lists pairs (W, Z) meaning W lies in the closure of Z.
  /// Throws on unknown or repeated labels, cycles, and pairs with dim W >= dim Z.
  StrataPoset(std::vector<Stratum> strata,
              const std::vector<std::pair<std::string, std::string>>& closure);

  const std::vector<Stratum>& strata() const { return strata_; }
  std::size_t size() const { return strata_.size(); }
  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  std::size_t index_of(const std::string& label) const;
  /// W strictly inside the closure of Z.
  bool below(const std::string& w, const std::string& z) const;
  /// Labels ordered by decreasing dimension, ties kept in input order.
  std::vector<std::string> top_down() const;

 private:
  std::vector<Stratum> strata_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> below_;
};

/// Rational value per labelled stratum, in insertion order.
class ConstructibleFunction {
 public:
  ConstructibleFunction() = default;
  explicit ConstructibleFunction(std::vector<std::pair<std::string, Rational>> values);

  const std::vector<std::pair<std::string, Rational>>& values() const { return values_; }
  /// Zero for labels never set.
  Rational operator()(const std::string& label) const;
  void set(const std::string& label, const Rational& value);
  bool operator==(const ConstructibleFunction&) const = default;

 private:
  std::vector<std::pair<std::string, Rational>> values_;
};

/// Entry (Z, W) is Eu of the closure of Z at a general point of W. Rows that
/// are given define the domain; missing entries default to 1 on the diagonal
/// and 0 off it.
class EuMatrix {
 public:
  EuMatrix() = default;
  explicit EuMatrix(std::map<std::string, std::map<std::string, Rational>> rows)
      : rows_(std::move(rows)) {}

  const std::map<std::string, std::map<std::string, Rational>>& rows() const { return rows_; }
  bool has_row(const std::string& z) const { return rows_.count(z) != 0; }
  Rational operator()(const std::string& z, const std::string& w) const;

 private:
  std::map<std::string, std::map<std::string, Rational>> rows_;
};

struct BasisAnalysis {
  std::size_t rank = 0;
  bool consistent = true;
  /// First nonzero entry of the eliminated right-hand side when inconsistent.
  Rational residual = 0;
  /// Free coefficients set to 0; meaningful when consistent.
  ConstructibleFunction particular;
  /// One vector per free basis element.
  std::vector<ConstructibleFunction> kernel;
};

/// Row reduction of target = sum coeff_i basis_i without deciding success.
BasisAnalysis analyze_in_basis(const ChowClass& target,
                               const std::vector<std::pair<std::string, ChowClass>>& basis);

/// Unique coefficients with target = sum coeff_i basis_i, by exact Gaussian
/// elimination. Throws Error{rank_deficient} or Error{inconsistent_system}.
ConstructibleFunction solve_in_basis(const ChowClass& target,
                                     const std::vector<std::pair<std::string, ChowClass>>& basis);

/// sum coeff_i basis_i.
ChowClass recombine(const ConstructibleFunction& coeffs,
                    const std::vector<std::pair<std::string, ChowClass>>& basis);

/// Checks that the rows of `eu` form an upward closed set of strata on which
/// the matrix is unitriangular; throws Error{not_unitriangular} otherwise.
void validate_eu(const EuMatrix& eu, const StrataPoset& poset);

/// Coefficients l_Z with nu = sum l_Z Eu_Z on the domain of `eu`, top down.
ConstructibleFunction eu_decompose(const ConstructibleFunction& nu, const EuMatrix& eu,
                                   const StrataPoset& poset);

/// sum l_Z Eu_Z evaluated on the domain of `eu`.
ConstructibleFunction eu_recompose(const ConstructibleFunction& coeffs, const EuMatrix& eu,
                                   const StrataPoset& poset);

struct ConeMultiplicity {
  std::string label;
  Integer multiplicity;
  int sign = 1;
};

/// |l_Z| for every nonzero l_Z; throws Error{non_integral}.
std::vector<ConeMultiplicity> cone_multiplicities(const ConstructibleFunction& coeffs);

}  // namespace cherncalc
