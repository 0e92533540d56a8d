#pragma once

#include <stdexcept>
#include <string>

namespace cherncalc {

/// Broad failure categories; the CLI maps each one to an exit code.
enum class ErrorKind {
  invalid_argument,
  parse,
  not_homogeneous,
  monte_carlo_disagreement,
  budget_exceeded,
  ring_mismatch,
  not_zero_dimensional,
  unlucky_coordinates,
  inconsistent_system,
  rank_deficient,
  not_unitriangular,
  non_integral,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cherncalc
