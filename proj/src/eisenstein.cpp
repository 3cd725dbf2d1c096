#include "branching/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "branching/errors.hpp"
#include "branching/integrate.hpp"

namespace branching {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

constexpr double lanczos_g = 7.0;
constexpr double lanczos[9] = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,      -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_2, B_4, ..., B_24
constexpr double bernoulli[12] = {1.0 / 6.0,         -1.0 / 30.0,          1.0 / 42.0,
                                  -1.0 / 30.0,       5.0 / 66.0,           -691.0 / 2730.0,
                                  7.0 / 6.0,         -3617.0 / 510.0,      43867.0 / 798.0,
                                  -174611.0 / 330.0, 854513.0 / 138.0,     -236364091.0 / 2730.0};

cplx zeta_euler_maclaurin(cplx s) {
  const int n = 20 + static_cast<int>(std::ceil(std::abs(s) / 2.0));
  cplx sum = 0.0;
  for (int k = n - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
  const double N = n;
  const cplx ns = std::exp(-s * std::log(N));
  sum += N * ns / (s - 1.0) + 0.5 * ns;
  cplx rising = s;  // s (s+1) ... (s+2k-2)
  double factorial = 2.0;
  cplx power = ns / N;  // N^{-s-2k+1}
  for (int k = 1; k <= 12; ++k) {
    const cplx term = bernoulli[k - 1] / factorial * rising * power;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    power /= N * N;
  }
  return sum;
}

int divisor_sum_terms(int n, std::vector<int>& divisors) {
  divisors.clear();
  for (int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    divisors.push_back(d);
    if (d * d != n) divisors.push_back(n / d);
  }
  return static_cast<int>(divisors.size());
}

// xi(2s) y^s + xi(2-2s) y^{1-s}
cplx constant_term_raw(cplx s, double y) {
  return completed_zeta(2.0 * s) * std::exp(s * std::log(y)) +
         completed_zeta(2.0 - 2.0 * s) * std::exp((1.0 - s) * std::log(y));
}

cplx completed_constant_term(cplx s, double y) {
  if (std::abs(s - 0.5) >= 0.05) return constant_term_raw(s, y);
  // The two poles at s = 1/2 cancel; average over a circle instead.
  constexpr int m = 32;
  constexpr double radius = 0.1;
  cplx acc = 0.0;
  for (int k = 0; k < m; ++k) acc += constant_term_raw(s + radius * std::exp(I * (2.0 * pi * (k + 0.5) / m)), y);
  return acc / static_cast<double>(m);
}

// 4 sqrt(y) sum_n n^{s-1/2} sigma_{1-2s}(n) K_{s-1/2}(2 pi n y) cos(2 pi n x)
cplx fourier_tail(cplx s, UpperHalfPoint z, int n_terms) {
  const cplx order = s - 0.5;
  std::vector<int> divisors;
  cplx acc = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double arg = 2.0 * pi * n * z.y;
    if (arg > std::abs(order) + 60.0) break;
    divisor_sum_terms(n, divisors);
    cplx sigma = 0.0;
    for (int d : divisors) sigma += std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(d)));
    const cplx coeff = std::exp(order * std::log(static_cast<double>(n))) * sigma;
    acc += coeff * bessel_k(order, arg) * std::cos(2.0 * pi * n * z.x);
  }
  return 4.0 * std::sqrt(z.y) * acc;
}

void require_pole_free(cplx s) {
  if (s == 0.0 || s == 1.0) throw Error(ErrorKind::pole, "the completed Eisenstein series has poles at s = 0, 1");
}

}  // namespace

UpperHalfPoint UpperHalfPoint::from(double x, double y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw Error(ErrorKind::domain_error, "point must lie in the upper half-plane");
  return {x, y};
}

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
      throw Error(ErrorKind::pole, "Gamma has poles at the non-positive integers");
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  cplx x = lanczos[0];
  for (int i = 1; i < 9; ++i) x += lanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx zeta(cplx s) {
  if (s == 1.0) throw Error(ErrorKind::pole, "zeta has a pole at s = 1");
  if (s.real() >= 0.0) return zeta_euler_maclaurin(s);
  const cplx one_minus = 1.0 - s;
  const cplx factor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(one_minus));
  return factor * std::sin(pi * s / 2.0) * zeta_euler_maclaurin(one_minus);
}

cplx completed_zeta(cplx s) {
  if (s == 0.0 || s == 1.0) throw Error(ErrorKind::pole, "xi has poles at s = 0 and s = 1");
  if (s.real() < 0.5) s = 1.0 - s;
  return std::exp(-0.5 * s * std::log(pi) + log_gamma(0.5 * s)) * zeta(s);
}

cplx bessel_k(cplx order, double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::domain_error, "bessel_k needs x > 0");
  if (order.real() < 0.0) order = -order;
  const double re = order.real();
  const double im = order.imag();

  // Shift the contour to Im u = phi, towards the saddle of -x cosh u + order u.
  double phi = 0.0;
  if (im != 0.0) {
    const double cap = std::abs(im) > 1.0 ? pi / 2.0 - 1.0 / std::abs(im) : 0.5;
    phi = std::copysign(std::min(std::asin(std::min(1.0, std::abs(im) / x)), cap), im);
  }
  const double cphi = std::cos(phi);

  // Modulus exponent along the shifted line is -x cosh(t) cos(phi) + re t - im phi.
  auto exponent = [&](double t) { return -x * std::cosh(t) * cphi + re * t; };
  const double t_peak = std::asinh(re / (x * cphi));
  const double peak = exponent(t_peak);
  constexpr double drop = 45.0;
  double lo = t_peak - 1.0, hi = t_peak + 1.0;
  for (double step = 1.0; exponent(lo) > peak - drop; step *= 1.5) lo -= step;
  for (double step = 1.0; exponent(hi) > peak - drop; step *= 1.5) hi += step;

  const double shift = peak - im * phi;
  auto integrand = [&](double t) {
    const cplx u(t, phi);
    return std::exp(-x * std::cosh(u) + order * u - shift);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-17;
  opts.rel_tol = 1e-13;
  opts.max_intervals = 20000;
  const QuadratureResult r = integrate(integrand, lo, hi, opts);
  return 0.5 * r.value * std::exp(shift);
}

cplx eisenstein_completed(cplx s, UpperHalfPoint z, int n_terms) {
  require_pole_free(s);
  return completed_constant_term(s, z.y) + fourier_tail(s, z, n_terms);
}

cplx eisenstein_gl2(const EisensteinParams& params, UpperHalfPoint z) {
  z = UpperHalfPoint::from(z.x, z.y);
  const cplx s = params.s;
  if (params.mode == EisensteinMode::lattice_sum) {
    if (!(s.real() > 1.0)) throw Error(ErrorKind::divergent_sum, "the lattice sum converges only for Re(s) > 1");
    return eisenstein_lattice_batch({s}, z, params.lattice_bound).front();
  }
  if (params.n_terms < 0) throw Error(ErrorKind::invalid_argument, "n_terms must be nonnegative");
  if (s == 0.5) return 0.0;
  if (s == 0.0) return 1.0;
  if (s == 1.0) throw Error(ErrorKind::pole, "E(s, z) has a pole at s = 1");
  return eisenstein_completed(s, z, params.n_terms) / completed_zeta(2.0 * s);
}

cplx eisenstein_product_numerator(UpperHalfPoint z0, UpperHalfPoint z, cplx s, int n_terms) {
  EisensteinParams p;
  p.n_terms = n_terms;
  p.s = 1.0 - s;
  const cplx left = eisenstein_gl2(p, z0);
  p.s = s;
  return left * eisenstein_gl2(p, z);
}

std::vector<cplx> eisenstein_lattice_batch(const std::vector<cplx>& s, UpperHalfPoint z, int lattice_bound) {
  z = UpperHalfPoint::from(z.x, z.y);
  for (const cplx& sj : s)
    if (!(sj.real() > 1.0)) throw Error(ErrorKind::divergent_sum, "the lattice sum converges only for Re(s) > 1");
  if (lattice_bound < 1) throw Error(ErrorKind::invalid_argument, "lattice bound must be positive");

  const double y = z.y;
  const double radius = lattice_bound * std::min(1.0, y);
  const double r2 = radius * radius;
  const std::size_t m = s.size();
  std::vector<cplx> acc(m);
  for (std::size_t j = 0; j < m; ++j) acc[j] = std::exp(s[j] * std::log(y));  // c = 0

  // (c, d) and (-c, -d) give the same term, which cancels the factor 1/2.
  std::vector<cplx> row(m);
  const long c_max = static_cast<long>(std::floor(radius / y));
  for (long c = 1; c <= c_max; ++c) {
    const double cy2 = (c * y) * (c * y);
    if (cy2 > r2) break;
    const double h = std::sqrt(r2 - cy2);
    const double center = -c * z.x;
    const long d_lo = static_cast<long>(std::ceil(center - h));
    const long d_hi = static_cast<long>(std::floor(center + h));
    std::fill(row.begin(), row.end(), cplx(0.0));
    for (long d = d_lo; d <= d_hi; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const double u = c * z.x + d;
      const double log_ratio = std::log(y / (u * u + cy2));
      for (std::size_t j = 0; j < m; ++j) row[j] += std::exp(s[j] * log_ratio);
    }
    for (std::size_t j = 0; j < m; ++j) acc[j] += row[j];
  }
  for (std::size_t j = 0; j < m; ++j) {
    const cplx sj = s[j];
    acc[j] += 3.0 / pi * std::exp((sj - 1.0) * std::log(y) + (2.0 - 2.0 * sj) * std::log(radius)) / (sj - 1.0);
  }
  return acc;
}

FourierCalibration calibrate_fourier_constants(const std::vector<cplx>& s_values,
                                               const std::vector<UpperHalfPoint>& points, int lattice_bound) {
  // Model: E = y^s + A phi(s) y^{1-s} + B F(s, z) / xi(2s).
  std::vector<cplx> target, b1, b2;
  for (const UpperHalfPoint& z : points) {
    const std::vector<cplx> lattice = eisenstein_lattice_batch(s_values, z, lattice_bound);
    for (std::size_t j = 0; j < s_values.size(); ++j) {
      const cplx s = s_values[j];
      const cplx xi2s = completed_zeta(2.0 * s);
      target.push_back(lattice[j] - std::exp(s * std::log(z.y)));
      b1.push_back(completed_zeta(2.0 - 2.0 * s) / xi2s * std::exp((1.0 - s) * std::log(z.y)));
      b2.push_back(fourier_tail(s, z, 30) / xi2s);
    }
  }
  cplx g11 = 0.0, g12 = 0.0, g22 = 0.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) {
    g11 += std::conj(b1[k]) * b1[k];
    g12 += std::conj(b1[k]) * b2[k];
    g22 += std::conj(b2[k]) * b2[k];
    r1 += std::conj(b1[k]) * target[k];
    r2 += std::conj(b2[k]) * target[k];
  }
  const cplx det = g11 * g22 - g12 * std::conj(g12);
  if (std::abs(det) == 0.0) throw Error(ErrorKind::internal, "calibration system is singular");
  FourierCalibration out;
  out.constant_multiplier = (g22 * r1 - g12 * r2) / det;
  out.coefficient_multiplier = (g11 * r2 - std::conj(g12) * r1) / det;
  out.max_residual = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) {
    const cplx fit = out.constant_multiplier * b1[k] + out.coefficient_multiplier * b2[k];
    out.max_residual = std::max(out.max_residual, std::abs(target[k] - fit) / std::max(1e-300, std::abs(target[k])));
  }
  return out;
}

}  // namespace branching
