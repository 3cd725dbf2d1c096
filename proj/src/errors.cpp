#include "branching/errors.hpp"

namespace branching {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_path: return "invalid-path";
    case ErrorKind::invalid_path_pair: return "invalid-path-pair";
    case ErrorKind::start_in_left_half_plane: return "start-in-left-half-plane";
    case ErrorKind::degenerate_parametrization: return "degenerate-parametrization";
    case ErrorKind::boundary_crossing: return "boundary-crossing";
    case ErrorKind::invalid_character: return "invalid-character";
    case ErrorKind::branch_ambiguity: return "branch-ambiguity";
    case ErrorKind::pole_on_contour: return "pole-on-contour";
    case ErrorKind::asymmetric_numerator: return "asymmetric-numerator";
    case ErrorKind::divergent_sum: return "divergent-sum";
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::branch_point_collision: return "branch-point-collision";
    case ErrorKind::quadrature_failure: return "quadrature-failure";
    case ErrorKind::pole: return "pole";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

bool is_numerical_failure(ErrorKind kind) {
  return kind == ErrorKind::branch_point_collision || kind == ErrorKind::quadrature_failure ||
         kind == ErrorKind::pole || kind == ErrorKind::internal;
}

}  // namespace branching
