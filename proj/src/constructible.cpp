#include "cherncalc/constructible.hpp"

#include <algorithm>
#include <numeric>

#include "cherncalc/error.hpp"

namespace cherncalc {

StrataPoset::StrataPoset(std::vector<Stratum> strata,
                         const std::vector<std::pair<std::string, std::string>>& closure)
    : strata_(std::move(strata)) {
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (!index_.emplace(strata_[i].label, i).second)
      throw Error(ErrorKind::invalid_argument, "repeated stratum " + strata_[i].label);
  }
  const std::size_t k = strata_.size();
  below_.assign(k, std::vector<bool>(k, false));
  for (const auto& [w, z] : closure) {
    const std::size_t a = index_of(w), b = index_of(z);
    if (strata_[a].dimension >= strata_[b].dimension)
      throw Error(ErrorKind::invalid_argument,
                  w + " in the closure of " + z + " needs a smaller dimension");
    below_[a][b] = true;
  }
  // Warshall; dimension strictly drops along every edge, so no cycles survive
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t a = 0; a < k; ++a)
      if (below_[a][m])
        for (std::size_t b = 0; b < k; ++b)
          if (below_[m][b]) below_[a][b] = true;
}

std::size_t StrataPoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorKind::invalid_argument, "unknown stratum " + label);
  return it->second;
}

bool StrataPoset::below(const std::string& w, const std::string& z) const {
  return below_[index_of(w)][index_of(z)];
}

std::vector<std::string> StrataPoset::top_down() const {
  std::vector<std::size_t> order(strata_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return strata_[a].dimension > strata_[b].dimension;
  });
  std::vector<std::string> out;
  for (auto i : order) out.push_back(strata_[i].label);
  return out;
}

ConstructibleFunction::ConstructibleFunction(std::vector<std::pair<std::string, Rational>> values) {
  for (auto& [label, v] : values) set(label, v);
}

Rational ConstructibleFunction::operator()(const std::string& label) const {
  for (const auto& [l, v] : values_)
    if (l == label) return v;
  return 0;
}

void ConstructibleFunction::set(const std::string& label, const Rational& value) {
  for (auto& [l, v] : values_)
    if (l == label) {
      v = value;
      return;
    }
  values_.emplace_back(label, value);
}

Rational EuMatrix::operator()(const std::string& z, const std::string& w) const {
  auto row = rows_.find(z);
  if (row != rows_.end()) {
    auto it = row->second.find(w);
    if (it != row->second.end()) return it->second;
  }
  return z == w ? 1 : 0;
}

BasisAnalysis analyze_in_basis(const ChowClass& target,
                               const std::vector<std::pair<std::string, ChowClass>>& basis) {
  if (basis.empty()) throw Error(ErrorKind::rank_deficient, "empty basis");
  const std::size_t rows = static_cast<std::size_t>(target.n()) + 1;
  const std::size_t cols = basis.size();
  // augmented matrix, one row per coefficient of h^k
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    if (basis[j].second.n() != target.n())
      throw Error(ErrorKind::ring_mismatch, "basis class " + basis[j].first + " lives elsewhere");
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = basis[j].second.coeffs()[i];
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][cols] = target.coeffs()[i];

  // reduced row echelon form; pivot is the first nonzero entry in row order
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  BasisAnalysis out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) {
      out.consistent = false;
      out.residual = a[i][cols];
      break;
    }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t j = 0; j < cols; ++j) out.particular.set(basis[j].first, 0);
  for (std::size_t i = 0; i < r; ++i) out.particular.set(basis[pivot_col[i]].first, a[i][cols]);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ConstructibleFunction k;
    for (std::size_t j = 0; j < cols; ++j) k.set(basis[j].first, j == f ? 1 : 0);
    for (std::size_t i = 0; i < r; ++i) k.set(basis[pivot_col[i]].first, -a[i][f]);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

ConstructibleFunction solve_in_basis(const ChowClass& target,
                                     const std::vector<std::pair<std::string, ChowClass>>& basis) {
  const BasisAnalysis an = analyze_in_basis(target, basis);
  if (!an.consistent)
    throw Error(ErrorKind::inconsistent_system,
                "target is not in the span of the basis (residual " + to_string(an.residual) +
                    " after elimination, rank " + std::to_string(an.rank) + ")");
  if (!an.kernel.empty()) {
    std::string kernel;
    for (const auto& k : an.kernel) {
      std::string v;
      for (const auto& [l, q] : k.values()) v += (v.empty() ? "" : ",") + to_string(q);
      kernel += " (" + v + ")";
    }
    throw Error(ErrorKind::rank_deficient, "basis of " + std::to_string(basis.size()) +
                                               " classes has rank " + std::to_string(an.rank) +
                                               "; kernel" + kernel);
  }
  return an.particular;
}

ChowClass recombine(const ConstructibleFunction& coeffs,
                    const std::vector<std::pair<std::string, ChowClass>>& basis) {
  if (basis.empty()) throw Error(ErrorKind::invalid_argument, "empty basis");
  ChowClass total(basis.front().second.n());
  for (const auto& [label, cls] : basis) total = total + coeffs(label) * cls;
  return total;
}

void validate_eu(const EuMatrix& eu, const StrataPoset& poset) {
  for (const auto& [z, row] : eu.rows()) {
    if (!poset.contains(z)) throw Error(ErrorKind::invalid_argument, "unknown stratum " + z);
    for (const auto& s : poset.strata())
      if (poset.below(z, s.label) && !eu.has_row(s.label))
        throw Error(ErrorKind::not_unitriangular,
                    "Eu rows must be closed upward: " + s.label + " lies above " + z);
    for (const auto& [w, v] : row) {
      if (!poset.contains(w)) throw Error(ErrorKind::invalid_argument, "unknown stratum " + w);
      if (w == z && v != 1)
        throw Error(ErrorKind::not_unitriangular, "Eu_" + z + "(" + z + ") must be 1");
      if (w != z && v != 0 && !poset.below(w, z))
        throw Error(ErrorKind::not_unitriangular,
                    "Eu_" + z + " is nonzero on " + w + ", which is not in its closure");
    }
    for (const auto& s : poset.strata())
      if (eu.has_row(s.label) && poset.below(s.label, z) && !row.count(s.label))
        throw Error(ErrorKind::invalid_argument, "missing Eu_" + z + "(" + s.label + ")");
  }
}

ConstructibleFunction eu_decompose(const ConstructibleFunction& nu, const EuMatrix& eu,
                                   const StrataPoset& poset) {
  validate_eu(eu, poset);
  ConstructibleFunction out;
  for (const auto& z : poset.top_down()) {
    if (!eu.has_row(z)) continue;
    Rational l = nu(z);
    for (const auto& [above, coeff] : out.values()) l -= coeff * eu(above, z);
    out.set(z, l);
  }
  return out;
}

ConstructibleFunction eu_recompose(const ConstructibleFunction& coeffs, const EuMatrix& eu,
                                   const StrataPoset& poset) {
  validate_eu(eu, poset);
  ConstructibleFunction out;
  for (const auto& w : poset.top_down()) {
    if (!eu.has_row(w)) continue;
    Rational v = 0;
    for (const auto& [z, coeff] : coeffs.values()) v += coeff * eu(z, w);
    out.set(w, v);
  }
  return out;
}

std::vector<ConeMultiplicity> cone_multiplicities(const ConstructibleFunction& coeffs) {
  std::vector<ConeMultiplicity> out;
  for (const auto& [label, v] : coeffs.values()) {
    if (!is_integral(v))
      throw Error(ErrorKind::non_integral,
                  "coefficient " + to_string(v) + " on " + label + " is not an integer");
    if (v == 0) continue;
    Integer num = v.get_num();
    out.push_back({label, abs(num), v > 0 ? 1 : -1});
  }
  return out;
}

}  // namespace cherncalc
