#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "branching/errors.hpp"
#include "branching/spectral_models.hpp"

using namespace branching;

namespace {
const cplx I(0, 1);
SpectralModel hilbert1() { return SpectralModel::hilbert_maass(GrossencharParams::from({1.0, -1.0})); }
}  // namespace

TEST_CASE("eigenvalue examples") {
  CHECK(std::abs(eigenvalue(hilbert1(), 0.5) - (-1.25)) < 1e-15);
  CHECK(std::abs(eigenvalue(SpectralModel::gl2q(), 0.0)) == 0.0);
  CHECK(std::abs(eigenvalue(SpectralModel::gl3_cuspidal(0.0), 0.5) - (-2.0)) < 1e-15);
  CHECK_THROWS_AS(eigenvalue(SpectralModel::gl3_min_parabolic(0.0), 0.5), Error);
}

TEST_CASE("minimal parabolic parametrizations") {
  CHECK(std::abs(eigenvalue_minparabolic_power(0, 0, 0)) == 0.0);
  CHECK(std::abs(eigenvalue_minparabolic_power(2, 0, -2)) < 1e-15);
  CHECK(std::abs(eigenvalue_minparabolic_root(2, 2, 0)) < 1e-15);
  CHECK(std::abs(eigenvalue_minparabolic_root(0, 0, 0)) == 0.0);
  CHECK(std::abs(eigenvalue_minparabolic_root(1, 1, 0) - (-2.0)) < 1e-15);
  CHECK(std::abs(eigenvalue_minparabolic_power(1, 0, -1) - (-2.0)) < 1e-15);
  CHECK_THROWS_AS(eigenvalue_minparabolic_power(1, 1, 1), Error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 200; ++k) {
    const cplx s1(u(rng), u(rng)), s2(u(rng), u(rng));
    CHECK(std::abs(eigenvalue_minparabolic_root(s1, s1 + s2, 0) - eigenvalue_minparabolic_power(s1, s2, -s1 - s2)) <
          1e-12 * (1 + std::norm(s1) + std::norm(s2)));
    const cplx sf(u(rng), u(rng)), s(u(rng), u(rng));
    CHECK(std::abs(eigenvalue_minparabolic_power(sf + s, -sf + s, -2.0 * s) -
                   2.0 * (sf * (sf - 1.0) + 3.0 * s * (s - 1.0))) < 1e-12 * (1 + std::norm(sf) + std::norm(s)));
  }
}

TEST_CASE("factorization identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const SpectralModel& m : {SpectralModel::gl2q(), hilbert1(), SpectralModel::gl3_cuspidal(1.5)}) {
    for (int k = 0; k < 100; ++k) {
      const cplx s(u(rng), u(rng)), w(u(rng), u(rng));
      const cplx lhs = eigenvalue(m, s) - lambda_w(m, w);
      const cplx rhs = m.leading_coeff() * ((s - 0.5) * (s - 0.5) - (w - 0.5) * (w - 0.5) - m.radicand_offset());
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + std::abs(lhs)));
    }
  }
  CHECK(SpectralModel::gl3_cuspidal(0.0).radicand_offset().real() == doctest::Approx(1.0 / 12));
}

TEST_CASE("poles") {
  CHECK(std::abs(poles(SpectralModel::gl2q(), 0.75).s_plus - 0.75) < 1e-15);

  const cplx w(1, 2);
  const PolePair p = poles(hilbert1(), w);
  CHECK(std::abs(p.s_plus - (0.5 + std::sqrt(cplx(-2.75, 2)))) < 1e-15);
  CHECK(std::abs(eigenvalue(hilbert1(), p.s_plus) - lambda_w(hilbert1(), w)) < 1e-10);
  CHECK(std::abs(p.s_plus + p.s_minus - 1.0) < 1e-15);
  CHECK(p.s_plus.real() > 0.5);

  CHECK(std::abs(poles(SpectralModel::gl3_cuspidal(0.0), 1.0).s_plus - (0.5 + std::sqrt(1.0 / 3))) < 1e-15);
  CHECK_THROWS_AS(poles(hilbert1(), cplx(0.3, 0)), Error);
}

TEST_CASE("branch points") {
  auto [a, b] = branch_points(SpectralModel::gl2q());
  CHECK(std::abs(a - 0.5) == 0.0);
  CHECK(std::abs(b - 0.5) == 0.0);
  std::tie(a, b) = branch_points(SpectralModel::gl3_cuspidal(0.0));
  CHECK(std::abs(b - (0.5 + I / (2 * std::sqrt(3.0)))) < 1e-15);
  CHECK(std::abs(a - (0.5 - I / (2 * std::sqrt(3.0)))) < 1e-15);

  const double tp = std::numbers::pi / std::log(std::numbers::phi);
  std::tie(a, b) = branch_points(SpectralModel::hilbert_maass(GrossencharParams::from({tp, -tp})));
  CHECK(b.imag() == doctest::Approx(6.5286).epsilon(1e-4));
}

TEST_CASE("grossencharacters from a unit") {
  const double le = std::log(std::numbers::phi);
  CHECK(grossenchar_from_unit(le, 0).trivial());
  const GrossencharParams one = grossenchar_from_unit(le, 1);
  CHECK(one.t[0] == doctest::Approx(6.5286).epsilon(1e-4));
  const GrossencharParams two = grossenchar_from_unit(le, 2);
  CHECK(two.t[0] == doctest::Approx(2 * one.t[0]));
  CHECK(two.t[0] + two.t[1] == doctest::Approx(0.0));
  CHECK_THROWS_AS(GrossencharParams::from({1.0, 0.5}), Error);
}
