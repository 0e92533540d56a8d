#include "cherncalc/error.hpp"

namespace cherncalc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::not_homogeneous: return "not_homogeneous";
    case ErrorKind::monte_carlo_disagreement: return "monte_carlo_disagreement";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::ring_mismatch: return "ring_mismatch";
    case ErrorKind::not_zero_dimensional: return "not_zero_dimensional";
    case ErrorKind::unlucky_coordinates: return "unlucky_coordinates";
    case ErrorKind::inconsistent_system: return "inconsistent_system";
    case ErrorKind::rank_deficient: return "rank_deficient";
    case ErrorKind::not_unitriangular: return "not_unitriangular";
    case ErrorKind::non_integral: return "non_integral";
  }
  return "unknown";
}

}  // namespace cherncalc
