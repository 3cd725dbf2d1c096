#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace branching {

using cplx = std::complex<double>;

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  int max_intervals = 5000;
};

struct QuadratureResult {
  cplx value = 0.0;
  double est_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. Throws quadrature-failure
/// (naming the worst interval) when the interval budget runs out.
QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Same, with the initial partition given by sorted breakpoints.
QuadratureResult integrate(const std::function<cplx(double)>& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& opts = {});

}  // namespace branching
