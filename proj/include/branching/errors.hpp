#pragma once

#include <stdexcept>
#include <string>

namespace branching {

enum class ErrorKind {
  invalid_argument,
  invalid_path,
  invalid_path_pair,
  start_in_left_half_plane,
  degenerate_parametrization,
  boundary_crossing,
  invalid_character,
  branch_ambiguity,
  pole_on_contour,
  asymmetric_numerator,
  divergent_sum,
  domain_error,
  parse_error,
  // Numerical failures below this line.
  branch_point_collision,
  quadrature_failure,
  pole,
  internal,
};

const char* to_string(ErrorKind kind);

/// True for failures of the numerics (CLI exit code 2) as opposed to
/// rejected input (exit code 1).
bool is_numerical_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace branching
