#include "branching/complex_paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "branching/errors.hpp"

namespace branching {

namespace {

// std::sqrt treats an imaginary part of -0.0 as below the cut; the crossing
// bookkeeping treats the whole closed negative real axis as the upper side.
cplx on_upper_side_of_cut(cplx z) {
  if (z.imag() == 0.0) return {z.real(), 0.0};
  return z;
}

bool is_upper(cplx z) { return z.imag() >= 0.0; }

double segment_distance_to_origin(cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(a);
  const double t = std::clamp(-(a.real() * d.real() + a.imag() * d.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * d);
}

// Signed crossing of the negative real axis by the chord a -> b.
int cut_crossing(cplx a, cplx b) {
  if (is_upper(a) == is_upper(b)) return 0;
  const double t = a.imag() / (a.imag() - b.imag());
  const double x = a.real() + t * (b.real() - a.real());
  if (x >= 0.0) return 0;
  return is_upper(a) ? 1 : -1;
}

class SqrtTracker {
 public:
  SqrtTracker(const std::function<cplx(cplx)>& radicand_of, const Tolerances& tol)
      : radicand_of_(radicand_of), tol_(tol) {}

  void start(cplx param, cplx radicand, int initial_branch) {
    if (initial_branch != 1 && initial_branch != -1)
      throw Error(ErrorKind::invalid_argument, "initial branch must be +1 or -1");
    radicand = on_upper_side_of_cut(radicand);
    check_point(radicand);
    if (radicand.imag() == 0.0 && radicand.real() < 0.0)
      throw Error(ErrorKind::invalid_argument, "initial radicand lies on the branch cut");
    params_.push_back(param);
    radicands_.push_back(radicand);
    roots_.push_back(static_cast<double>(initial_branch) * std::sqrt(radicand));
  }

  void advance(cplx param, cplx radicand) { step(params_.back(), radicands_.back(), param, radicand, 0); }

  std::vector<cplx> params_;
  std::vector<cplx> radicands_;
  std::vector<cplx> roots_;
  int crossings_ = 0;

 private:
  void check_point(cplx r) const {
    if (std::abs(r) <= tol_.collision)
      throw Error(ErrorKind::branch_point_collision, "radicand passes through the branch point 0");
  }

  void step(cplx pa, cplx ra, cplx pb, cplx rb, int depth) {
    rb = on_upper_side_of_cut(rb);
    check_point(rb);
    const double turn = std::abs(std::arg(rb / ra));
    if (turn > std::numbers::pi / 2.0) {
      if (depth >= tol_.max_refinement_depth)
        throw Error(ErrorKind::branch_point_collision,
                    "refinement depth exhausted near the branch point 0");
      const cplx pm = 0.5 * (pa + pb);
      const cplx rm = on_upper_side_of_cut(radicand_of_(pm));
      step(pa, ra, pm, rm, depth + 1);
      step(pm, rm, pb, rb, depth + 1);
      return;
    }
    if (segment_distance_to_origin(ra, rb) <= tol_.collision)
      throw Error(ErrorKind::branch_point_collision, "radicand segment passes through 0");
    const cplx prev = roots_.back();
    cplx root = std::sqrt(rb);
    if (std::abs(root - prev) > std::abs(root + prev)) root = -root;
    crossings_ += cut_crossing(ra, rb);
    params_.push_back(pb);
    radicands_.push_back(rb);
    roots_.push_back(root);
  }

  const std::function<cplx(cplx)>& radicand_of_;
  Tolerances tol_;
};

BranchTrace finish(SqrtTracker& tracker, int initial_branch, double step_control, bool keep_params) {
  BranchTrace trace;
  trace.cut_crossings = tracker.crossings_;
  const cplx principal = static_cast<double>(initial_branch) * std::sqrt(tracker.radicands_.back());
  const double alignment = (tracker.roots_.back() * std::conj(principal)).real();
  trace.final_sign = alignment > 0.0 ? 1 : -1;
  const int parity_sign = (trace.cut_crossings % 2 == 0) ? 1 : -1;
  if (parity_sign != trace.final_sign)
    throw Error(ErrorKind::internal, "branch parity disagrees with the continued root");
  if (keep_params) trace.w_samples = CurveSamples{std::move(tracker.params_), step_control};
  trace.radicand_samples = CurveSamples{std::move(tracker.radicands_), step_control};
  trace.sqrt_samples = CurveSamples{std::move(tracker.roots_), step_control};
  return trace;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

WPath WPath::from_points(std::vector<cplx> points, std::string label) {
  WPath path{std::move(points), std::move(label)};
  validate(path);
  return path;
}

double WPath::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) total += std::abs(points[i] - points[i - 1]);
  return total;
}

void validate(const WPath& path) {
  if (path.points.size() < 2) throw Error(ErrorKind::invalid_path, "a path needs at least two points");
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    if (path.points[i] == path.points[i - 1])
      throw Error(ErrorKind::invalid_path, "consecutive path points coincide");
    if (!std::isfinite(path.points[i].real()) || !std::isfinite(path.points[i].imag()))
      throw Error(ErrorKind::invalid_path, "non-finite path point");
  }
}

double BranchTrace::max_square_defect() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < sqrt_samples.size(); ++k) {
    const cplx r = radicand_samples[k];
    const cplx s = sqrt_samples[k];
    worst = std::max(worst, std::abs(s * s - r) / (1.0 + std::abs(r)));
  }
  return worst;
}

bool BranchTrace::is_continuous() const {
  for (std::size_t k = 1; k < sqrt_samples.size(); ++k) {
    const cplx a = sqrt_samples[k - 1];
    const cplx b = sqrt_samples[k];
    if (!(std::abs(b - a) < std::abs(b + a))) return false;
  }
  return true;
}

CurveSamples sample_path(const WPath& path, double step) {
  validate(path);
  if (!(step > 0.0)) throw Error(ErrorKind::invalid_argument, "sampling step must be positive");
  CurveSamples out;
  out.step_control = step;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    const cplx a = path.points[i];
    const cplx b = path.points[i + 1];
    const double legs = std::ceil(std::abs(b - a) / step - 1e-9);
    const int n = std::max(1, static_cast<int>(legs));
    for (int j = 0; j < n; ++j) out.samples.push_back(a + (static_cast<double>(j) / n) * (b - a));
  }
  out.samples.push_back(path.points.back());
  return out;
}

BranchTrace track_sqrt(const CurveSamples& radicand, int initial_branch, const Tolerances& tol) {
  if (radicand.size() < 1) throw Error(ErrorKind::invalid_argument, "empty radicand samples");
  const std::function<cplx(cplx)> identity = [](cplx r) { return r; };
  SqrtTracker tracker(identity, tol);
  tracker.start(radicand[0], radicand[0], initial_branch);
  for (std::size_t k = 1; k < radicand.size(); ++k) tracker.advance(radicand[k], radicand[k]);
  return finish(tracker, initial_branch, radicand.step_control, false);
}

BranchTrace track_sqrt_along(const CurveSamples& w_samples, const std::function<cplx(cplx)>& radicand_of,
                             int initial_branch, const Tolerances& tol) {
  if (w_samples.size() < 1) throw Error(ErrorKind::invalid_argument, "empty path samples");
  SqrtTracker tracker(radicand_of, tol);
  tracker.start(w_samples[0], radicand_of(w_samples[0]), initial_branch);
  for (std::size_t k = 1; k < w_samples.size(); ++k) tracker.advance(w_samples[k], radicand_of(w_samples[k]));
  return finish(tracker, initial_branch, w_samples.step_control, true);
}

double ParabolaCoefficients::residual(cplx point) const {
  const double x = point.real();
  const double y = point.imag();
  const double predicted = a2 * y * y + c0;
  const double scale = std::max({1.0, std::abs(x), std::abs(a2 * y * y) + std::abs(c0)});
  return std::abs(x - predicted) / scale;
}

namespace {

RadicandCurve sweep(double linear, double offset, double a2, double c0, std::pair<double, double> range,
                    double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::invalid_argument, "curve step must be positive");
  if (range.first == range.second) throw Error(ErrorKind::invalid_argument, "empty sigma range");
  // radicand(sigma) = sigma^2 + offset + i * linear * sigma
  const double sigma_max = std::max(std::abs(range.first), std::abs(range.second));
  const double speed = std::hypot(2.0 * sigma_max, linear);
  const double span = std::abs(range.second - range.first);
  const int n = std::max(2, static_cast<int>(std::ceil(span * speed / step)));
  RadicandCurve out;
  out.curve.step_control = step;
  out.curve.samples.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double sigma = range.first + (range.second - range.first) * static_cast<double>(k) / n;
    out.curve.samples.emplace_back(sigma * sigma + offset, linear * sigma);
  }
  out.parabola = {a2, c0};
  return out;
}

}  // namespace

RadicandCurve radicand_curve(double t_norm, double alpha, std::pair<double, double> sigma_range, double step) {
  if (!(t_norm > 0.0)) throw Error(ErrorKind::invalid_argument, "t_norm must be positive");
  if (alpha == 0.0)
    throw Error(ErrorKind::degenerate_parametrization, "alpha = 0 collapses the curve onto the real axis");
  const double t2 = t_norm * t_norm;
  const double a2 = 1.0 / (4.0 * alpha * alpha * t2);
  const double c0 = (1.0 - alpha * alpha) * t2;
  return sweep(2.0 * alpha * t_norm, c0, a2, c0, sigma_range, step);
}

RadicandCurve radicand_curve_trivial(double t_o, std::pair<double, double> sigma_range, double step) {
  if (t_o == 0.0)
    throw Error(ErrorKind::degenerate_parametrization, "t_o = 0 puts the crossing on the branch point");
  const double t2 = t_o * t_o;
  return sweep(2.0 * t_o, -t2, 1.0 / (4.0 * t2), -t2, sigma_range, step);
}

bool crosses_origin(double t_norm, double alpha, double boundary_tol) {
  if (!(t_norm > 0.0)) throw Error(ErrorKind::invalid_argument, "t_norm must be positive");
  if (alpha == 0.0) throw Error(ErrorKind::degenerate_parametrization, "alpha must be nonzero");
  if (std::abs(std::abs(alpha) - 1.0) <= boundary_tol)
    throw Error(ErrorKind::boundary_crossing, "|alpha| = 1: the radicand passes through the origin");
  return std::abs(alpha) > 1.0;
}

void write_csv(std::ostream& out, const CurveSamples& samples) {
  out << "k,re,im\n";
  for (std::size_t k = 0; k < samples.size(); ++k)
    out << k << ',' << format_double(samples[k].real()) << ',' << format_double(samples[k].imag()) << '\n';
}

std::string polyline_svg(const CurveSamples& samples, double width, double height) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const cplx& z : samples.samples) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-12});
  xmin -= pad, xmax += pad, ymin -= pad, ymax += pad;
  const double sx = width / (xmax - xmin);
  const double sy = height / (ymax - ymin);
  auto px = [&](double x) { return (x - xmin) * sx; };
  auto py = [&](double y) { return height - (y - ymin) * sy; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"" << width << "\" y2=\"" << py(0.0)
      << "\" stroke=\"#999\"/>\n";
  svg << "<line x1=\"" << px(0.0) << "\" y1=\"0\" x2=\"" << px(0.0) << "\" y2=\"" << height
      << "\" stroke=\"#999\"/>\n";
  svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k) svg << ' ';
    svg << px(samples[k].real()) << ',' << py(samples[k].imag());
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace branching
