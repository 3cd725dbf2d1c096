#pragma once

#include <functional>

#include "branching/continuation.hpp"

namespace branching::verify {

/// i * int_{-T}^{T} f(1/2 + i tau) dtau, plus the |tau| > T part on the
/// tangent-mapped half lines when `with_tail` is set (f must decay like 1/tau^2).
cplx line_oracle(const std::function<cplx(cplx)>& f, double T, double tol, std::vector<double> breaks = {},
                 bool with_tail = false);

/// int ds / (lambda - lambda_w)^nu truncated at T, plus the closed-form tail.
cplx inverse_power_truncated(const SpectralModel& model, cplx w, double T = 1e5, double tol = 1e-13);

/// Same integral over the whole line through tau = tan(theta).
cplx inverse_power_mapped(const SpectralModel& model, cplx w, double tol = 1e-13);

/// 2 pi int_0^inf r dr / (r^2 + w^2)^2 with r = u / (1 - u).
cplx radial_planar_oracle(cplx w, double tol = 1e-12);

/// Counterclockwise trapezoid rule on the circle |s - center| = radius.
cplx contour_loop(const std::function<cplx(cplx)>& f, cplx center, double radius, int points = 256);

struct OracleContinuation {
  cplx value;
  cplx line;
  cplx loops;
  cplx s_end;
  bool crossed = false;
};

/// Follows the pole by nearest-root continuation on a fine grid (no cut
/// bookkeeping), integrates along the line at the endpoint and adds the
/// loops that keep the crossed poles on their original sides.
OracleContinuation deformed_contour_continuation(const Numerator& numerator, const SpectralModel& model,
                                                 const WPath& path, double T, double tol, double step = 0.002);

/// Regularize at the endpoint with a symmetric polynomial matching N (and N'
/// for double poles) at s_star, integrate the remainder, and add the
/// right-of-line closed forms of the regularizer continued to s_star.
cplx four_step_continuation(const Numerator& numerator, const SpectralModel& model, cplx w_end, cplx s_star,
                            double T, double tol);

/// N'(s) from the Cauchy integral on a small circle.
cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx s, double radius = 0.1, int points = 64);

}  // namespace branching::verify
