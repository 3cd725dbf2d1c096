#pragma once

#include <complex>
#include <vector>

namespace branching {

using cplx = std::complex<double>;

struct UpperHalfPoint {
  double x = 0.0;
  double y = 1.0;

  static UpperHalfPoint from(double x, double y);  // domain error unless y > 0
  cplx z() const { return {x, y}; }
};

/// log Gamma(z) (Lanczos, g = 7), continued to Re z < 1/2 by reflection.
cplx log_gamma(cplx z);

/// Riemann zeta; pole error at s = 1.
cplx zeta(cplx s);

/// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), with xi(s) = xi(1 - s). Pole error at 0 and 1.
cplx completed_zeta(cplx s);

/// K_order(x) for x > 0.
cplx bessel_k(cplx order, double x);

enum class EisensteinMode { lattice_sum, fourier };

struct EisensteinParams {
  cplx s = 2.0;
  int n_terms = 30;
  EisensteinMode mode = EisensteinMode::fourier;
  int lattice_bound = 2000;
};

/// E(s, z) = sum over Gamma_inf \ SL2(Z) of Im(gamma z)^s.
cplx eisenstein_gl2(const EisensteinParams& params, UpperHalfPoint z);

/// xi(2s) E(s, z), invariant under s -> 1 - s, entire apart from poles at s = 0, 1.
cplx eisenstein_completed(cplx s, UpperHalfPoint z, int n_terms = 30);

/// E(1 - s, z0) E(s, z), fourier mode.
cplx eisenstein_product_numerator(UpperHalfPoint z0, UpperHalfPoint z, cplx s, int n_terms = 30);

/// Lattice sums at several s in a single pass over the coprime pairs
/// (all Re(s) > 1), including the smoothed tail beyond the cutoff.
std::vector<cplx> eisenstein_lattice_batch(const std::vector<cplx>& s, UpperHalfPoint z, int lattice_bound = 2000);

/// Least-squares multipliers (A, B) of the constant-term ratio and of the
/// Fourier coefficients, fitted so the fourier mode reproduces lattice sums at
/// the given convergent points. Both are 1 for the built-in normalization.
struct FourierCalibration {
  cplx constant_multiplier;
  cplx coefficient_multiplier;
  double max_residual;
};

FourierCalibration calibrate_fourier_constants(const std::vector<cplx>& s_values,
                                               const std::vector<UpperHalfPoint>& points, int lattice_bound = 2000);

}  // namespace branching
