#include <doctest.h>

#include <cmath>
#include <numbers>

#include "branching/errors.hpp"
#include "branching/quadrature.hpp"
#include "branching/verify/oracles.hpp"

using namespace branching;

namespace {
constexpr double pi = std::numbers::pi;
const cplx I(0, 1);
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("gauss-kronrod on smooth and peaked integrands") {
  const QuadratureResult r = integrate([](double x) { return cplx(std::exp(-x * x)); }, -8, 8);
  CHECK(std::abs(r.value - std::sqrt(pi)) < 1e-13);
  const QuadratureResult p = integrate([](double x) { return cplx(1.0 / (x * x + 1e-6)); }, {-1.0, 0.0, 1.0});
  CHECK(rel(p.value, 2e3 * std::atan(1e3)) < 1e-10);
}

TEST_CASE("line quadrature examples") {
  const QuadratureResult r = adaptive_line_quadrature([](cplx s) { return 1.0 / (s * (s - 1.0)); }, 1e4, 1e-12);
  CHECK(std::abs(r.value - (-2.0 * pi * I)) < 1e-3);  // truncation error is 2/T
  CHECK(std::abs(r.value + 2.0 * I * 2.0 * std::atan(2e4)) < 1e-10);
  CHECK(std::abs(adaptive_line_quadrature([](cplx) { return cplx(0); }, 10, 1e-12).value) == 0.0);
  const QuadratureResult g = adaptive_line_quadrature([](cplx s) { return std::exp(-s.imag() * s.imag()); }, 20, 1e-13);
  CHECK(std::abs(g.value - std::sqrt(pi) * I) < 1e-12);
}

TEST_CASE("singular line integral closed forms") {
  const SpectralModel gl2 = SpectralModel::gl2q();
  CHECK(std::abs(singular_line_integral(gl2, 1.0) - (-2.0 * pi * I)) < 1e-14);
  const cplx w(0.2, 0.7);
  CHECK(std::abs(singular_line_integral(gl2, w) - 2.0 * pi * I / (2.0 * w - 1.0)) < 1e-14);

  const SpectralModel gl3 = SpectralModel::gl3_cuspidal(0.0);
  const double r = std::sqrt(1.0 / 3);
  const cplx closed = singular_line_integral(gl3, 0.5 + r);
  CHECK(rel(closed, 4.0 * pi * I / (36.0 * std::pow(2 * r, 3))) < 1e-14);
  CHECK(rel(closed, verify::inverse_power_truncated(gl3, 1.0, 1e5)) < 1e-6);
  CHECK_THROWS_AS(singular_line_integral(gl2, cplx(0.5, 1.0)), Error);
}

TEST_CASE("singular tails match quadrature beyond T") {
  for (const SpectralModel& m : {SpectralModel::gl2q(), SpectralModel::gl3_cuspidal(1.0)}) {
    const cplx w(1.1, 0.4);
    const cplx lw = lambda_w(m, w);
    auto f = [&](cplx s) {
      const cplx d = eigenvalue(m, s) - lw;
      return m.pole_order() == 2 ? 1.0 / (d * d) : 1.0 / d;
    };
    const cplx full = verify::line_oracle(f, 7.0, 1e-13, {}, true);
    const cplx cut = verify::line_oracle(f, 7.0, 1e-13, {}, false);
    CHECK(std::abs(singular_line_tail(m, w, 7.0) - (full - cut)) < 1e-11);
  }
}

TEST_CASE("regularized line integrals") {
  LineIntegrandSpec c{Numerator::constant(1.0), SpectralModel::gl2q(), 1.5};
  const RegularizedResult r = regularized_line_integral(c, 1.5);
  CHECK(std::abs(r.principal) < 1e-14);
  CHECK(std::abs(r.total - (-pi * I)) < 1e-13);
  CHECK(std::abs(direct_line_integral(c).value - (-pi * I)) < 1e-9);

  LineIntegrandSpec g{Numerator::gaussian(1.0),
                      SpectralModel::hilbert_maass(GrossencharParams::from({1.0, -1.0})), 1.2};
  const cplx sg = poles(g.model, g.w).s_plus;
  CHECK(rel(regularized_line_integral(g, sg).total, direct_line_integral(g).value) < 1e-8);

  LineIntegrandSpec e{Numerator::eisenstein_product({0, 1}, {0, 1}), SpectralModel::gl2q(), 1.3, 30.0};
  CHECK(rel(regularized_line_integral(e, 1.3).total, direct_line_integral(e).value) < 1e-8);

  CHECK_THROWS_AS(regularized_line_integral(g, 0.9), Error);
}

TEST_CASE("planar singular integral") {
  CHECK(std::abs(planar_singular_integral(1.0) - pi) < 1e-15);
  CHECK(std::abs(planar_singular_integral(2.0) - pi / 4) < 1e-15);
  const cplx w(1, 1);
  CHECK(std::abs(planar_singular_integral(w) - pi / (2.0 * I)) < 1e-15);
  CHECK(rel(verify::radial_planar_oracle(w), pi / (2.0 * I)) < 1e-6);
}

TEST_CASE("circle integrals") {
  CHECK(std::abs(circle_average([](double, double) { return cplx(1); }, 0.7) - 2 * pi * 0.7) < 1e-13);
  CHECK(std::abs(circle_average([](double x, double y) { return cplx(std::exp(-(x * x + y * y))); }, 1.0) -
                 2 * pi * std::exp(-1.0)) < 1e-13);
  CHECK(std::abs(circle_average([](double x, double y) { return cplx(std::exp(-(x * x + y * y)) * x); }, 1.3)) <
        1e-13);
}

TEST_CASE("planar regularized integral") {
  auto gauss = [](double x, double y) { return cplx(std::exp(-(x * x + y * y))); };
  const cplx w(0.8, 0.3);
  CHECK(rel(planar_regularized_integral(gauss, w).total, planar_direct_integral(gauss, w).value) < 1e-8);
  CHECK(std::abs(planar_regularized_integral([](double, double) { return cplx(0); }, w).total) == 0.0);

  const PlanarVerification v = verify_no_branching_planar(gauss, {-1, 0.5}, {1, 0.5});
  CHECK(v.difference <= 1e-6);
  const PlanarVerification z = verify_no_branching_planar([](double, double) { return cplx(0); }, {-1, 0.5}, {1, 0.5});
  CHECK(z.difference == 0.0);
  const PlanarVerification q = verify_no_branching_planar(
      [](double x, double y) { return cplx((x * x + y * y) * std::exp(-(x * x + y * y))); }, {-1, 0.5}, {1, 0.5});
  CHECK(q.difference <= 1e-6);
}

TEST_CASE("planar integral jumps across the imaginary axis") {
  auto gauss = [](double x, double y) { return cplx(std::exp(-(x * x + y * y))); };
  auto direct = [&](cplx w) { return planar_direct_integral(gauss, w).value; };
  const cplx w(1, 0.5);
  CHECK(rel(direct(-w), direct(w)) < 1e-10);
  // The two sides of Re w = 0 are complex conjugates and their gap does not close.
  for (double eps : {0.05, 0.02}) {
    const cplx right = direct({eps, 1.0}), left = direct({-eps, 1.0});
    CHECK(std::abs(left - std::conj(right)) < 1e-8 * std::abs(right));
    CHECK(std::abs(right - left) > 1.0);
  }
  CHECK_THROWS_AS(planar_singular_integral(cplx(0.0, 1.0)), Error);
}
