#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cherncalc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical exact text form: "3", "-1/2".
std::string to_string(const Rational& q);

/// Parses "3", "-7", "2/6" (normalized). Throws Error{parse} on bad input.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace cherncalc
