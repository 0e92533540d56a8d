#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cherncalc/chow.hpp"
#include "cherncalc/constructible.hpp"
#include "cherncalc/groebner.hpp"
#include "cherncalc/hypersurface.hpp"
#include "cherncalc/segre.hpp"

namespace cherncalc {

using Json = nlohmann::ordered_json;

/// {"n": 2, "coeffs": ["0", "3", "1"]}, coefficient k on h^k.
Json chow_to_json(const ChowClass& c);
/// Accepts "coeffs" (h^k) or "points" ({"7": "69", ...} on [P^k]); values
/// may be rational strings or integers.
ChowClass chow_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json config_to_json(const SegreConfig& config);
Json report_to_json(const HypersurfaceReport& report, const SegreConfig& config);
Json constructible_to_json(const ConstructibleFunction& f);
Json basis_to_json(const GroebnerBasis& gb);

/// Strata file: labels with dimensions, closure pairs, CSM classes on
/// P^n as h^k arrays, and Eu rows.
struct StrataData {
  StrataPoset poset;
  std::vector<std::pair<std::string, ChowClass>> csm;
  EuMatrix eu;
};
StrataData strata_from_json(const Json& j);

/// Parses a whole file; throws Error{parse} on unreadable or malformed input.
Json read_json_file(const std::string& path);

}  // namespace cherncalc
