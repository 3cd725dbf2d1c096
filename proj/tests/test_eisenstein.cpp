#include <doctest.h>

#include <cmath>
#include <numbers>

#include "branching/eisenstein.hpp"
#include "branching/errors.hpp"
#include "branching/numerator.hpp"

using namespace branching;

namespace {
constexpr double pi = std::numbers::pi;
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("zeta") {
  CHECK(std::abs(zeta(2.0) - pi * pi / 6) < 1e-14);
  CHECK(std::abs(zeta(0.0) + 0.5) < 1e-14);
  double partial = 0;
  for (int n = 1; n <= 100; ++n) partial += 1.0 / (double(n) * n * n);
  const double z3 = zeta(3.0).real();
  CHECK(z3 > partial);
  CHECK(z3 < partial + 1.0 / (2.0 * 100 * 100));
  CHECK(rel(zeta({0.5, 14.134725141734693}), 1.0) > 0.99);  // near the first zero
  CHECK(std::abs(zeta({0.5, 14.134725141734693})) < 1e-9);
  CHECK_THROWS_AS(zeta(1.0), Error);
  const cplx s(0.3, 4.0);
  CHECK(rel(completed_zeta(s), completed_zeta(1.0 - s)) < 1e-12);
}

TEST_CASE("bessel_k") {
  CHECK(std::abs(bessel_k(0.5, 1.0) - std::sqrt(pi / 2) * std::exp(-1.0)) < 1e-14);
  CHECK(bessel_k(0.0, 1.0).real() == doctest::Approx(0.42102443824070834).epsilon(1e-13));
  const cplx nu(0.3, 5.0);
  CHECK(rel(bessel_k(nu, 2.5), bessel_k(-nu, 2.5)) < 1e-12);
  // K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu
  const double x = 3.0;
  CHECK(rel(bessel_k(nu + 1.0, x), bessel_k(nu - 1.0, x) + 2.0 * nu / x * bessel_k(nu, x)) < 1e-10);
}

TEST_CASE("Eisenstein series invariance and modes") {
  EisensteinParams p;
  p.s = {0.5, 3.0};
  const UpperHalfPoint z{0.21, 1.1};
  const cplx e = eisenstein_gl2(p, z);
  CHECK(rel(eisenstein_gl2(p, {z.x + 1.0, z.y}), e) < 1e-10);
  const cplx inv = -1.0 / z.z();
  CHECK(rel(eisenstein_gl2(p, {inv.real(), inv.imag()}), e) < 1e-8);

  p.s = 3.0;
  const cplx fourier = eisenstein_gl2(p, {0, 1});
  p.mode = EisensteinMode::lattice_sum;
  CHECK(rel(eisenstein_gl2(p, {0, 1}), fourier) < 1e-6);
  CHECK_THROWS_AS(UpperHalfPoint::from(0.0, -1.0), Error);
}

TEST_CASE("Eisenstein product numerator") {
  const UpperHalfPoint i{0, 1};
  const cplx a = eisenstein_product_numerator(i, i, {0.5, 2.3});
  const cplx b = eisenstein_product_numerator(i, i, {0.5, -2.3});
  CHECK(rel(a, b) < 1e-12);
  CHECK(std::abs(eisenstein_product_numerator(i, i, 0.5).imag()) < 1e-9);

  EisensteinParams p;
  p.s = 3.0;
  p.mode = EisensteinMode::lattice_sum;
  const cplx e3 = eisenstein_gl2(p, i);
  p.mode = EisensteinMode::fourier;
  p.s = -2.0;
  CHECK(rel(eisenstein_product_numerator(i, i, 3.0), eisenstein_gl2(p, i) * e3) < 1e-6);

  const Numerator n = Numerator::eisenstein_product(i, i);
  const auto [defect, peak] = n.symmetry_defect(20.0);
  CHECK(defect <= 1e-10 * peak);
  const cplx s(0.4, 1.0);
  CHECK(rel(n(s), n(1.0 - s)) < 1e-10);
}
