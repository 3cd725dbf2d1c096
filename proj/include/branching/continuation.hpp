#pragma once

#include <optional>
#include <vector>

#include "branching/quadrature.hpp"

namespace branching {

/// Term picked up when the two poles trade sides of the critical line.
/// term_value = coefficient * numerator_value + derivative_coefficient * numerator_derivative;
/// the derivative part only appears for double poles.
struct CorrectionTerm {
  cplx s_star;
  int order = 1;
  cplx coefficient;
  cplx numerator_value;
  cplx derivative_coefficient;
  cplx numerator_derivative;
  cplx term_value;
};

struct ContinuationOptions {
  double T = 40.0;
  double tol = 1e-11;
  double sample_step = 0.01;
  double min_endpoint_offset = 0.05;  // required |Re(w_end) - 1/2|
  Tolerances tolerances{};
};

struct ContinuationResult {
  cplx endpoint_value;
  std::vector<CorrectionTerm> corrections;
  BranchTrace trace;
  double est_error = 0.0;

  cplx s_end() const { return 0.5 + trace.sqrt_samples.samples.back(); }
};

/// Continues s(w) = 1/2 + sqrt((w - 1/2)^2 + c) along the path, starting on the
/// branch with Re(s) > 1/2. The trace's sqrt samples are s(w) - 1/2.
BranchTrace continue_pole(const SpectralModel& model, const WPath& path, const ContinuationOptions& opts = {});

/// Closed-form correction at the continued pole s_star (now left of the line).
CorrectionTerm correction_term(const Numerator& numerator, const SpectralModel& model, cplx s_star);

ContinuationResult continue_integral(const Numerator& numerator, const SpectralModel& model, const WPath& path,
                                     const ContinuationOptions& opts = {});

/// Heights at which the path crosses Re(w) = 1/2, in order.
std::vector<double> critical_line_crossings(const WPath& path);

struct BranchingOptions {
  ContinuationOptions continuation{};
  /// Enforce path1 crossing above sqrt(c) and path2 below it.
  bool require_height_separation = true;
};

struct BranchingDifference {
  cplx difference;
  CorrectionTerm expected;
  double relative_agreement = 0.0;
  ContinuationResult first;
  ContinuationResult second;
};

BranchingDifference branching_difference(const Numerator& numerator, const SpectralModel& model, cplx w_end,
                                         const WPath& path1, const WPath& path2, const BranchingOptions& opts = {});

struct PlanarVerification {
  RegularizedResult right;       // regularized value at w_right
  cplx right_direct;             // direct quadrature at w_right
  RegularizedResult continued;   // regularized representation carried to w_left
  cplx left_direct;              // direct quadrature at w_left
  double difference = 0.0;       // |continued.total - left_direct|
};

PlanarVerification verify_no_branching_planar(const PlanarFunction& numerator2d, cplx w_left, cplx w_right,
                                              const PlanarOptions& opts = {});

}  // namespace branching
