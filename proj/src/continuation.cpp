#include "branching/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "branching/errors.hpp"

namespace branching {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

bool right_of_line(cplx w) { return w.real() > 0.5; }

bool same_point(cplx a, cplx b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)); }

}  // namespace

BranchTrace continue_pole(const SpectralModel& model, const WPath& path, const ContinuationOptions& opts) {
  validate(path);
  if (!right_of_line(path.front()))
    throw Error(ErrorKind::start_in_left_half_plane, "the path must start with Re(w) > 1/2");
  if (model.kind() == ModelKind::gl3_min_parabolic)
    throw Error(ErrorKind::invalid_argument, "the minimal-parabolic model has no movable pole");
  const CurveSamples ws = sample_path(path, opts.sample_step);
  auto rad = [&model](cplx w) { return radicand(model, w); };
  return track_sqrt_along(ws, rad, +1, opts.tolerances);
}

std::vector<double> critical_line_crossings(const WPath& path) {
  std::vector<double> heights;
  for (std::size_t k = 0; k + 1 < path.points.size(); ++k) {
    const cplx a = path.points[k];
    const cplx b = path.points[k + 1];
    if (right_of_line(a) == right_of_line(b)) continue;
    const double t = (0.5 - a.real()) / (b.real() - a.real());
    heights.push_back(a.imag() + t * (b.imag() - a.imag()));
  }
  return heights;
}

CorrectionTerm correction_term(const Numerator& numerator, const SpectralModel& model, cplx s_star) {
  if (model.kind() == ModelKind::gl3_min_parabolic)
    throw Error(ErrorKind::invalid_argument, "the minimal-parabolic model has no movable pole");
  const double a = model.leading_coeff();
  const cplx m = 2.0 * s_star - 1.0;
  if (std::abs(m) == 0.0) throw Error(ErrorKind::branch_point_collision, "the two poles coincide");
  CorrectionTerm term;
  term.s_star = s_star;
  term.order = model.pole_order();
  term.numerator_value = numerator(s_star);
  if (term.order == 1) {
    term.coefficient = 4.0 * pi * I / (a * (1.0 - 2.0 * s_star));
  } else {
    // 2 pi i (Res_{1-s*} - Res_{s*}) of N / (a^2 (s - s*)^2 (s - 1 + s*)^2)
    term.coefficient = 8.0 * pi * I / (a * a * m * m * m);
    term.derivative_coefficient = -4.0 * pi * I / (a * a * m * m);
    term.numerator_derivative = numerator.derivative(s_star);
  }
  term.term_value = term.coefficient * term.numerator_value + term.derivative_coefficient * term.numerator_derivative;
  return term;
}

ContinuationResult continue_integral(const Numerator& numerator, const SpectralModel& model, const WPath& path,
                                     const ContinuationOptions& opts) {
  ContinuationResult out;
  out.trace = continue_pole(model, path, opts);
  if (critical_line_crossings(path).size() > 1)
    throw Error(ErrorKind::invalid_path, "only paths crossing the critical line once are supported");
  const cplx w_end = path.back();
  if (std::abs(w_end.real() - 0.5) <= opts.min_endpoint_offset)
    throw Error(ErrorKind::invalid_path, "the endpoint is too close to the critical line");
  const cplx s_end = out.s_end();
  if (std::abs(s_end.real() - 0.5) <= 1e-9)
    throw Error(ErrorKind::pole_on_contour, "the continued pole sits on the critical line");
  check_symmetric(numerator, opts.T, std::max(opts.tol, 1e-10));

  const LineIntegralResult line = direct_line_integral({numerator, model, w_end, opts.T, opts.tol});
  out.endpoint_value = line.value;
  out.est_error = line.est_error + line.tail_bound;
  if (out.trace.final_sign == -1 && !right_of_line(w_end)) {
    out.corrections.push_back(correction_term(numerator, model, s_end));
    out.endpoint_value += out.corrections.back().term_value;
  }
  return out;
}

BranchingDifference branching_difference(const Numerator& numerator, const SpectralModel& model, cplx w_end,
                                         const WPath& path1, const WPath& path2, const BranchingOptions& opts) {
  validate(path1);
  validate(path2);
  if (!same_point(path1.back(), w_end) || !same_point(path2.back(), w_end))
    throw Error(ErrorKind::invalid_path_pair, "both paths must end at w_end");
  if (right_of_line(w_end)) throw Error(ErrorKind::invalid_path_pair, "w_end must satisfy Re(w_end) < 1/2");
  if (opts.require_height_separation) {
    const double root_c = std::sqrt(std::abs(model.radicand_offset()));
    if (root_c == 0.0) throw Error(ErrorKind::invalid_path_pair, "c = 0: there are no branch points to separate");
    const auto h1 = critical_line_crossings(path1);
    const auto h2 = critical_line_crossings(path2);
    if (h1.size() != 1 || !(std::abs(h1[0]) > root_c))
      throw Error(ErrorKind::invalid_path_pair, "path1 must cross once outside the branch points");
    if (h2.size() != 1 || !(std::abs(h2[0]) < root_c))
      throw Error(ErrorKind::invalid_path_pair, "path2 must cross once between the branch points");
  }

  BranchingDifference out;
  out.first = continue_integral(numerator, model, path1, opts.continuation);
  out.second = continue_integral(numerator, model, path2, opts.continuation);
  out.difference = out.first.endpoint_value - out.second.endpoint_value;

  const bool c1 = !out.first.corrections.empty();
  const bool c2 = !out.second.corrections.empty();
  if (c1 && !c2) {
    out.expected = out.first.corrections.front();
  } else if (c2 && !c1) {
    out.expected = out.second.corrections.front();
    out.expected.coefficient = -out.expected.coefficient;
    out.expected.derivative_coefficient = -out.expected.derivative_coefficient;
    out.expected.term_value = -out.expected.term_value;
  } else {
    out.expected.s_star = out.first.s_end();
    out.expected.order = model.pole_order();
  }
  const double scale = std::abs(out.expected.term_value);
  const double gap = std::abs(out.difference - out.expected.term_value);
  out.relative_agreement = scale > 0.0 ? gap / scale : gap;
  return out;
}

PlanarVerification verify_no_branching_planar(const PlanarFunction& numerator2d, cplx w_left, cplx w_right,
                                              const PlanarOptions& opts) {
  if (!(w_left.real() < 0.0) || !(w_right.real() > 0.0))
    throw Error(ErrorKind::invalid_argument, "need Re(w_left) < 0 < Re(w_right)");
  const double scale = 1e-12 * (1.0 + std::abs(w_right));
  const bool mirrored = std::abs(w_left.real() + w_right.real()) <= scale &&
                        std::abs(std::abs(w_left.imag()) - std::abs(w_right.imag())) <= scale;
  if (!mirrored)
    throw Error(ErrorKind::invalid_argument, "w_left must mirror w_right across the imaginary axis");

  PlanarVerification out;
  out.right = planar_regularized_integral(numerator2d, w_right, opts);
  out.right_direct = planar_direct_integral(numerator2d, w_right, opts).value;

  // pi / w^2 continues along the segment unless it passes through w = 0.
  const cplx d = w_left - w_right;
  const double t = std::clamp(-(w_right.real() * d.real() + w_right.imag() * d.imag()) / std::norm(d), 0.0, 1.0);
  if (std::abs(w_right + t * d) <= 1e-12)
    throw Error(ErrorKind::pole_on_contour, "the crossing passes through w = 0");

  out.continued = planar_regularized_integral(numerator2d, w_left, opts);
  out.left_direct = planar_direct_integral(numerator2d, w_left, opts).value;
  out.difference = std::abs(out.continued.total - out.left_direct);
  return out;
}

}  // namespace branching
