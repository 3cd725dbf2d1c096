#include "branching/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "branching/errors.hpp"

namespace branching::verify {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

QuadratureOptions tight(double tol) {
  QuadratureOptions q;
  q.abs_tol = tol;
  q.rel_tol = tol;
  q.max_intervals = 50000;
  return q;
}

cplx inverse_power(const SpectralModel& model, cplx s, cplx lw) {
  const cplx d = eigenvalue(model, s) - lw;
  return model.pole_order() == 2 ? 1.0 / (d * d) : 1.0 / d;
}

}  // namespace

cplx line_oracle(const std::function<cplx(cplx)>& f, double T, double tol, std::vector<double> breaks,
                 bool with_tail) {
  std::vector<double> b{-T, 0.0, T};
  for (double x : breaks)
    if (std::abs(x) < T) b.push_back(x);
  for (double x = 2.0; x < T; x *= 4.0) {
    b.push_back(x);
    b.push_back(-x);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  cplx value = I * integrate([&](double tau) { return f(cplx(0.5, tau)); }, b, tight(tol)).value;
  if (with_tail) {
    const double edge = std::atan(T);
    auto mapped = [&](double th) {
      const double tau = std::tan(th);
      return (f(cplx(0.5, tau)) + f(cplx(0.5, -tau))) * (1.0 + tau * tau);
    };
    value += I * integrate(mapped, edge, pi / 2.0, tight(tol)).value;
  }
  return value;
}

cplx inverse_power_truncated(const SpectralModel& model, cplx w, double T, double tol) {
  const cplx lw = lambda_w(model, w);
  const cplx q = std::sqrt(radicand(model, w));
  auto f = [&](cplx s) { return inverse_power(model, s, lw); };
  return line_oracle(f, T, tol, {q.imag(), -q.imag()}) + singular_line_tail(model, w, T);
}

cplx inverse_power_mapped(const SpectralModel& model, cplx w, double tol) {
  const cplx lw = lambda_w(model, w);
  const cplx q = std::sqrt(radicand(model, w));
  auto g = [&](double th) {
    const double tau = std::tan(th);
    return inverse_power(model, cplx(0.5, tau), lw) * (1.0 + tau * tau);
  };
  std::vector<double> b{-pi / 2.0, 0.0, pi / 2.0, std::atan(q.imag()), std::atan(-q.imag())};
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return I * integrate(g, b, tight(tol)).value;
}

cplx radial_planar_oracle(cplx w, double tol) {
  const cplx w2 = w * w;
  auto g = [&](double u) {
    const double r = u / (1.0 - u);
    const cplx d = r * r + w2;
    return r / (d * d) / ((1.0 - u) * (1.0 - u));
  };
  const double knee = std::abs(w) / (1.0 + std::abs(w));
  const double knee2 = std::abs(w.imag()) / (1.0 + std::abs(w.imag()));
  std::vector<double> b{0.0, knee, knee2, 1.0};
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return 2.0 * pi * integrate(g, b, tight(tol)).value;
}

cplx contour_loop(const std::function<cplx(cplx)>& f, cplx center, double radius, int points) {
  cplx acc = 0.0;
  for (int k = 0; k < points; ++k) {
    const cplx e = std::exp(I * (2.0 * pi * k / points));
    acc += f(center + radius * e) * e;
  }
  return acc * I * radius * (2.0 * pi / points);
}

cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx s, double radius, int points) {
  cplx acc = 0.0;
  for (int k = 0; k < points; ++k) {
    const cplx e = std::exp(I * (2.0 * pi * k / points));
    acc += f(s + radius * e) / e;
  }
  return acc / (radius * points);
}

OracleContinuation deformed_contour_continuation(const Numerator& numerator, const SpectralModel& model,
                                                 const WPath& path, double T, double tol, double step) {
  const CurveSamples ws = sample_path(path, step);
  auto pole_candidates = [&](cplx w) {
    const cplx q = std::sqrt(radicand(model, w));
    return std::pair<cplx, cplx>{0.5 + q, 0.5 - q};
  };
  cplx s = pole_candidates(ws[0]).first;
  if (!(s.real() > 0.5)) throw Error(ErrorKind::invalid_argument, "oracle path must start right of the line");
  for (std::size_t k = 1; k < ws.size(); ++k) {
    const auto [a, b] = pole_candidates(ws[k]);
    if (std::abs(a - b) < 1e-6) throw Error(ErrorKind::branch_point_collision, "oracle path meets a branch point");
    s = std::abs(a - s) <= std::abs(b - s) ? a : b;
  }

  OracleContinuation out;
  out.s_end = s;
  out.crossed = s.real() < 0.5;
  const cplx w_end = path.back();
  const cplx lw = lambda_w(model, w_end);
  auto g = [&](cplx z) { return numerator(z) * inverse_power(model, z, lw); };
  out.line = line_oracle(g, T, tol, {s.imag(), -s.imag()}, !numerator.decays());
  if (out.crossed) {
    double room = std::abs(2.0 * s - 1.0);
    for (const cplx p : numerator.poles()) room = std::min({room, std::abs(p - s), std::abs(p - (1.0 - s))});
    // Small loops keep fast-growing numerators from cancelling catastrophically.
    const double radius = std::min(0.4 * room, 0.25);
    out.loops = contour_loop(g, 1.0 - s, radius) - contour_loop(g, s, radius);
  }
  out.value = out.line + out.loops;
  return out;
}

cplx four_step_continuation(const Numerator& numerator, const SpectralModel& model, cplx w_end, cplx s_star,
                            double T, double tol) {
  const double a = model.leading_coeff();
  const cplx m = 2.0 * s_star - 1.0;
  const cplx lw = lambda_w(model, w_end);
  auto n = [&](cplx s) { return numerator(s); };
  const cplx n_star = n(s_star);

  cplx A = n_star, B = 0.0;
  if (model.pole_order() == 2) {
    B = cauchy_derivative(n, s_star, 0.05) / m;
    A = n_star - B * (s_star - 0.5) * (s_star - 0.5);
  }
  auto reg = [&](cplx s) { return A + B * (s - 0.5) * (s - 0.5); };
  auto principal_integrand = [&](cplx s) { return (n(s) - reg(s)) * inverse_power(model, s, lw); };
  const cplx principal = line_oracle(principal_integrand, T, tol, {s_star.imag(), -s_star.imag()}, true);

  // Right-of-line closed forms of the regularizer, continued to s_star.
  if (model.pole_order() == 1) return principal + A * 2.0 * pi * I / (a * (1.0 - 2.0 * s_star));
  const cplx constant_part = 4.0 * pi * I / (a * a * m * m * m);
  const cplx quadratic_part = -pi * I / (a * a * m);
  return principal + A * constant_part + B * quadratic_part;
}

}  // namespace branching::verify
