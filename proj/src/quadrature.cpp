#include "branching/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "branching/errors.hpp"

namespace branching {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

std::vector<double> line_breaks(double T, const std::vector<double>& extra) {
  std::vector<double> b{-T, T};
  for (double x = 1.0; x < T; x *= 10.0) {
    b.push_back(x);
    b.push_back(-x);
  }
  b.push_back(0.0);
  for (double x : extra)
    if (std::abs(x) < T) b.push_back(x);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

// int_T^inf dtau / (tau^2 + q^2)
cplx tail_order1(cplx q, double T) {
  const cplx x = q / T;
  if (std::abs(x) < 0.1) {
    cplx acc = 0.0, term = 1.0 / T;
    for (int k = 0; k < 30; ++k) {
      acc += term / (2.0 * k + 1.0);
      term *= -x * x;
    }
    return acc;
  }
  return std::atan(x) / q;
}

// int_T^inf dtau / (tau^2 + q^2)^2
cplx tail_order2(cplx q, double T) {
  const cplx x = q / T;
  if (std::abs(x) < 0.1) {
    cplx acc = 0.0, term = 1.0 / (T * T * T);
    for (int k = 0; k < 30; ++k) {
      acc += (k + 1.0) * term / (2.0 * k + 3.0);
      term *= -x * x;
    }
    return acc;
  }
  const cplx q2 = q * q;
  return std::atan(x) / (2.0 * q2 * q) - T / (2.0 * q2 * (T * T + q2));
}

cplx denominator(const SpectralModel& model, cplx s, cplx lw) {
  const cplx d = eigenvalue(model, s) - lw;
  return model.pole_order() == 2 ? d * d : d;
}

void require_line_model(const SpectralModel& model) {
  if (model.kind() == ModelKind::gl3_min_parabolic)
    throw Error(ErrorKind::invalid_argument, "line integrals need a model with a pole radicand");
}

void require_line_settings(double T, double tol) {
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_argument, "truncation T must be positive");
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
}

// Rough size of the neglected |tau| > T part of int N / D^nu for decaying N.
double numerator_tail_bound(const Numerator& n, const SpectralModel& model, double T) {
  if (!n.decays()) return 0.0;
  const int nu = model.pole_order();
  const double edge = std::max(std::abs(n(cplx(0.5, T))), std::abs(n(cplx(0.5, -T))));
  return 2.0 * edge * std::pow(T, 1.0 - 2.0 * nu) / ((2.0 * nu - 1.0) * std::pow(model.leading_coeff(), nu));
}

std::vector<double> pole_heights(const SpectralModel& model, cplx w) {
  const cplx q = std::sqrt(radicand(model, w));
  return {q.imag(), -q.imag()};
}

cplx angular_integral(const PlanarFunction& f, double r, double tol) {
  if (r == 0.0) return 2.0 * pi * f(0.0, 0.0);
  return circle_average(f, r, tol) / r;
}

}  // namespace

QuadratureResult adaptive_line_quadrature(const std::function<cplx(cplx)>& f, double T, double tol,
                                          std::vector<double> extra_breaks) {
  require_line_settings(T, tol);
  QuadratureOptions opts;
  opts.abs_tol = tol;
  opts.rel_tol = tol;
  opts.max_intervals = 20000;
  auto g = [&](double tau) { return I * f(cplx(0.5, tau)); };
  return integrate(g, line_breaks(T, extra_breaks), opts);
}

cplx singular_closed_form(const SpectralModel& model, cplx s_star, PoleSide side) {
  require_line_model(model);
  const double a = model.leading_coeff();
  const cplx m = 2.0 * s_star - 1.0;
  if (model.pole_order() == 1) {
    const cplx right = 2.0 * pi * I / (a * (1.0 - 2.0 * s_star));
    return side == PoleSide::right ? right : -right;
  }
  const cplx right = 4.0 * pi * I / (a * a * m * m * m);
  return side == PoleSide::right ? right : -right;
}

cplx singular_line_integral(const SpectralModel& model, cplx s_star) {
  const double offset = s_star.real() - 0.5;
  if (std::abs(offset) <= 1e-12 * std::max(1.0, std::abs(s_star)))
    throw Error(ErrorKind::pole_on_contour, "the pole lies on the critical line");
  return singular_closed_form(model, s_star, offset > 0.0 ? PoleSide::right : PoleSide::left);
}

cplx singular_line_tail(const SpectralModel& model, cplx w, double T) {
  require_line_model(model);
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_argument, "truncation T must be positive");
  const double a = model.leading_coeff();
  const cplx q = std::sqrt(radicand(model, w));
  if (model.pole_order() == 1) return -2.0 * I / a * tail_order1(q, T);
  return 2.0 * I / (a * a) * tail_order2(q, T);
}

LineIntegralResult direct_line_integral(const LineIntegrandSpec& spec) {
  require_line_model(spec.model);
  require_line_settings(spec.T, spec.tol);
  const cplx lw = lambda_w(spec.model, spec.w);
  auto f = [&](cplx s) { return spec.numerator(s) / denominator(spec.model, s, lw); };
  const QuadratureResult q = adaptive_line_quadrature(f, spec.T, spec.tol, pole_heights(spec.model, spec.w));
  LineIntegralResult out;
  out.value = q.value;
  out.est_error = q.est_error;
  if (!spec.numerator.decays())
    out.value += spec.numerator(0.5) * singular_line_tail(spec.model, spec.w, spec.T);
  out.tail_bound = numerator_tail_bound(spec.numerator, spec.model, spec.T);
  return out;
}

void check_symmetric(const Numerator& numerator, double T, double tol) {
  const auto [defect, peak] = numerator.symmetry_defect(T);
  if (defect > tol * peak)
    throw Error(ErrorKind::asymmetric_numerator, "numerator is not symmetric under s -> 1 - s");
}

RegularizedResult regularized_line_integral(const LineIntegrandSpec& spec, cplx s_star) {
  require_line_model(spec.model);
  require_line_settings(spec.T, spec.tol);
  const cplx singular_unit = singular_line_integral(spec.model, s_star);
  const cplx lw = lambda_w(spec.model, spec.w);
  const cplx ls = eigenvalue(spec.model, s_star);
  if (std::abs(ls - lw) > 1e-8 * (1.0 + std::abs(ls) + std::abs(lw)))
    throw Error(ErrorKind::invalid_argument, "s_star is not a pole of the integrand");
  check_symmetric(spec.numerator, spec.T, std::max(spec.tol, 1e-10));

  const cplx n_star = spec.numerator(s_star);
  RegularizedResult out;
  if (spec.numerator.kind() != NumeratorKind::constant) {
    auto f = [&](cplx s) { return (spec.numerator(s) - n_star) / denominator(spec.model, s, lw); };
    const QuadratureResult q = adaptive_line_quadrature(f, spec.T, spec.tol, pole_heights(spec.model, spec.w));
    out.principal = q.value - n_star * singular_line_tail(spec.model, spec.w, spec.T);
    out.est_error = q.est_error;
    out.tail_bound = numerator_tail_bound(spec.numerator, spec.model, spec.T);
  }
  out.singular = n_star * singular_unit;
  out.total = out.principal + out.singular;
  return out;
}

cplx planar_singular_integral(cplx w) {
  if (std::abs(w.real()) <= 1e-14 * std::abs(w) || w == 0.0)
    throw Error(ErrorKind::pole_on_contour, "w^2 lies on (-inf, 0]");
  return pi / (w * w);
}

cplx circle_average(const PlanarFunction& f, double radius, double tol) {
  if (!(radius > 0.0)) throw Error(ErrorKind::invalid_argument, "radius must be positive");
  int n = 16;
  cplx sum = 0.0;
  double mass = 0.0;
  auto add = [&](double th) {
    const cplx v = f(radius * std::cos(th), radius * std::sin(th));
    sum += v;
    mass += std::abs(v);
  };
  for (int k = 0; k < n; ++k) add(2.0 * pi * k / n);
  cplx value = sum * (2.0 * pi * radius / n);
  for (int level = 0; level < 14; ++level) {
    for (int k = 0; k < n; ++k) add(2.0 * pi * (k + 0.5) / n);
    n *= 2;
    const cplx refined = sum * (2.0 * pi * radius / n);
    const double change = std::abs(refined - value);
    value = refined;
    // cancelling integrands are measured against the mean of |N|
    if (change <= tol * std::max(std::abs(value), mass * (2.0 * pi * radius / n)) || change <= 1e-300)
      return value;
  }
  throw Error(ErrorKind::quadrature_failure, "angular trapezoid rule did not converge");
}

QuadratureResult planar_direct_integral(const PlanarFunction& f, cplx w, const PlanarOptions& opts) {
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
  const double T = opts.T > 0.0 ? opts.T : 50.0 * std::max(1.0, std::abs(w));
  const cplx w2 = w * w;
  const double angular_tol = opts.tol * 1e-2;
  auto radial = [&](double r) {
    const cplx d = r * r + w2;
    return angular_integral(f, r, angular_tol) * r / (d * d);
  };
  std::vector<double> breaks{0.0, T};
  for (double x : {std::abs(w.imag()), std::abs(w)})
    if (x > 0.0 && x < T) breaks.push_back(x);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  QuadratureOptions q;
  q.abs_tol = opts.tol * 1e-3;
  q.rel_tol = opts.tol;
  q.max_intervals = 20000;
  return integrate(radial, breaks, q);
}

RegularizedResult planar_regularized_integral(const PlanarFunction& f, cplx w, const PlanarOptions& opts) {
  const cplx singular_unit = planar_singular_integral(w);
  const double T = opts.T > 0.0 ? opts.T : 50.0 * std::max(1.0, std::abs(w));
  const double rw = std::abs(w);
  const cplx circle = circle_average(f, rw, opts.tol * 1e-2);
  const cplx j = opts.normalization == CircleNormalization::average ? circle / (2.0 * pi * rw) : circle;

  PlanarOptions inner = opts;
  inner.T = T;
  auto shifted = [&](double x, double y) { return f(x, y) - j; };
  const QuadratureResult q = planar_direct_integral(shifted, w, inner);
  RegularizedResult out;
  out.principal = q.value - j * pi / (T * T + w * w);
  out.singular = j * singular_unit;
  out.total = out.principal + out.singular;
  out.est_error = q.est_error;
  out.tail_bound = std::abs(f(T, 0.0)) * pi / std::abs(T * T + w * w);
  return out;
}

}  // namespace branching
