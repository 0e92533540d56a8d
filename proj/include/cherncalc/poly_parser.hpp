#pragma once

#include <cstddef>
#include <string_view>

#include "cherncalc/polynomial.hpp"

namespace cherncalc {

/// Parses the polynomial text grammar into a ring with nvars variables.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | variable | '(' expr ')'
///
/// Variables are x0, x1, ... ; the single letters x, y, z, w are accepted
/// as aliases for x0..x3. A variable outside the ring is an error, never
/// silently widened.
RatPoly parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace cherncalc
