#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace branching {

using cplx = std::complex<double>;

/// Numerical tolerances shared by the path and branch utilities.
struct Tolerances {
  double absolute = 1e-12;
  double relative = 1e-10;
  /// Minimum distance between a radicand segment and the branch point 0.
  double collision = 1e-10;
  int max_refinement_depth = 40;
};

/// Piecewise-linear path of the complex parameter w.
struct WPath {
  std::vector<cplx> points;
  std::string label;

  /// Validates the invariants (>= 2 points, consecutive points distinct).
  static WPath from_points(std::vector<cplx> points, std::string label = {});

  const cplx& front() const { return points.front(); }
  const cplx& back() const { return points.back(); }
  double length() const;
};

void validate(const WPath& path);

struct CurveSamples {
  std::vector<cplx> samples;
  double step_control = 0.0;

  std::size_t size() const { return samples.size(); }
  const cplx& operator[](std::size_t k) const { return samples[k]; }
};

/// A square root continued along a sampled radicand curve.
struct BranchTrace {
  CurveSamples w_samples;  // empty when the radicand was supplied directly
  CurveSamples radicand_samples;
  CurveSamples sqrt_samples;
  int cut_crossings = 0;  // signed crossings of the negative real axis, +1 counterclockwise
  int final_sign = 1;     // +1 iff cut_crossings is even

  /// Largest |sqrt^2 - radicand| / (1 + |radicand|) over the trace.
  double max_square_defect() const;
  /// True iff |s_{k+1} - s_k| < |s_{k+1} + s_k| at every step.
  bool is_continuous() const;
};

/// Samples the path so that adjacent samples are at most `step` apart.
CurveSamples sample_path(const WPath& path, double step);

/// Continues sqrt along the radicand samples, starting on the root whose real
/// part has sign `initial_branch` (+1 picks the principal root).
BranchTrace track_sqrt(const CurveSamples& radicand, int initial_branch, const Tolerances& tol = {});

/// Same as track_sqrt, but the radicand is an exact function of the path
/// parameter w; refinement bisects in w and re-evaluates the radicand.
BranchTrace track_sqrt_along(const CurveSamples& w_samples, const std::function<cplx(cplx)>& radicand_of,
                             int initial_branch, const Tolerances& tol = {});

/// x = a2 * y^2 + c0, the parabola traced by a horizontal crossing's radicand.
struct ParabolaCoefficients {
  double a2 = 0.0;
  double c0 = 0.0;

  double residual(cplx point) const;  // relative defect of x - (a2 y^2 + c0)
};

struct RadicandCurve {
  CurveSamples curve;
  ParabolaCoefficients parabola;
};

/// Radicand (sigma^2 + (1 - alpha^2) t^2) + (2 sigma alpha t) i for sigma
/// running from sigma_range.first to sigma_range.second.
RadicandCurve radicand_curve(double t_norm, double alpha, std::pair<double, double> sigma_range,
                             double step);

/// Trivial-character radicand (sigma^2 - t_o^2) + (2 sigma t_o) i.
RadicandCurve radicand_curve_trivial(double t_o, std::pair<double, double> sigma_range, double step);

/// Whether a horizontal crossing at height alpha * t_norm winds the radicand
/// around the origin (|alpha| > 1).
bool crosses_origin(double t_norm, double alpha, double boundary_tol = 1e-9);

/// Writes `k,re,im` rows with 17 significant digits.
void write_csv(std::ostream& out, const CurveSamples& samples);

/// Minimal SVG document with one polyline (y axis flipped so Im points up).
std::string polyline_svg(const CurveSamples& samples, double width = 640.0, double height = 480.0);

}  // namespace branching
