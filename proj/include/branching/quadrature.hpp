#pragma once

#include <functional>

#include "branching/integrate.hpp"
#include "branching/numerator.hpp"
#include "branching/spectral_models.hpp"

namespace branching {

/// int_{1/2 - iT}^{1/2 + iT} f(s) ds (ds = i dtau), absolute/relative tolerance tol.
QuadratureResult adaptive_line_quadrature(const std::function<cplx(cplx)>& f, double T, double tol,
                                          std::vector<double> extra_breaks = {});

enum class PoleSide { right, left };

/// Closed form of int_{1/2 + iR} ds / (lambda(s) - lambda_w)^nu with s_star one of the two poles
/// and `side` the side of the critical line it is taken to lie on.
cplx singular_closed_form(const SpectralModel& model, cplx s_star, PoleSide side);

/// singular_closed_form with the side read off from Re(s_star).
cplx singular_line_integral(const SpectralModel& model, cplx s_star);

/// Contribution of |tau| > T to int ds / (lambda(s) - lambda_w)^nu.
cplx singular_line_tail(const SpectralModel& model, cplx w, double T);

struct LineIntegrandSpec {
  Numerator numerator;
  SpectralModel model;
  cplx w;
  double T = 40.0;
  double tol = 1e-11;
};

struct LineIntegralResult {
  cplx value;
  double est_error = 0.0;
  double tail_bound = 0.0;
};

/// int N(s) / (lambda(s) - lambda_w)^nu ds over the truncated line; constant
/// numerators get the exact tail.
LineIntegralResult direct_line_integral(const LineIntegrandSpec& spec);

struct RegularizedResult {
  cplx principal;
  cplx singular;
  cplx total;
  double est_error = 0.0;
  double tail_bound = 0.0;
};

/// principal = int (N(s) - N(s*)) / D^nu, singular = N(s*) * closed form, total = principal + singular.
RegularizedResult regularized_line_integral(const LineIntegrandSpec& spec, cplx s_star);

/// Throws asymmetric-numerator when |N(1/2+it) - N(1/2-it)| > tol * max|N| on |t| <= T.
void check_symmetric(const Numerator& numerator, double T, double tol);

using PlanarFunction = std::function<cplx(double, double)>;

/// int_{R^2} d eta / (|eta|^2 + w^2)^2 = pi / w^2.
cplx planar_singular_integral(cplx w);

/// Arc-length integral of N over the circle |eta| = radius (2 pi r for N = 1).
cplx circle_average(const PlanarFunction& numerator2d, double radius, double tol = 1e-12);

enum class CircleNormalization { average, integral };

struct PlanarOptions {
  double T = 0.0;  // disk radius; 0 selects 50 * max(1, |w|)
  double tol = 1e-10;
  CircleNormalization normalization = CircleNormalization::average;
};

/// int_{|eta| <= T} N / (|eta|^2 + w^2)^2 d eta in polar coordinates.
QuadratureResult planar_direct_integral(const PlanarFunction& numerator2d, cplx w, const PlanarOptions& opts = {});

RegularizedResult planar_regularized_integral(const PlanarFunction& numerator2d, cplx w,
                                              const PlanarOptions& opts = {});

}  // namespace branching
