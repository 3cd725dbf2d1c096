#include <doctest.h>

#include <cmath>
#include <numbers>

#include "branching/continuation.hpp"
#include "branching/errors.hpp"
#include "branching/verify/oracles.hpp"

using namespace branching;

namespace {
constexpr double pi = std::numbers::pi;
const cplx I(0, 1);
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
SpectralModel hilbert1() { return SpectralModel::hilbert_maass(GrossencharParams::from({1.0, -1.0})); }
WPath horizontal(double h) { return WPath::from_points({{2.0, h}, {-1.0, h}}); }
WPath via(double h, cplx end) { return WPath::from_points({1.2, {1.2, h}, {end.real(), h}, end}); }
}  // namespace

TEST_CASE("pole continuation along horizontal paths") {
  CHECK(continue_pole(hilbert1(), horizontal(2.0)).final_sign == -1);
  CHECK(continue_pole(hilbert1(), horizontal(0.5)).final_sign == 1);

  const WPath right = WPath::from_points({{2, 0}, {2, 3}, {0.8, 3}});
  const BranchTrace t = continue_pole(hilbert1(), right);
  CHECK(t.final_sign == 1);
  CHECK(std::abs(0.5 + t.sqrt_samples.samples.back() - poles(hilbert1(), {0.8, 3}).s_plus) < 1e-12);

  CHECK_THROWS_AS(continue_pole(hilbert1(), WPath::from_points({{0.2, 1}, {1, 1}})), Error);
  CHECK_THROWS_AS(continue_pole(hilbert1(), WPath::from_points({{1, 1}, {0.5, 1}, {0, 1}})), Error);
}

TEST_CASE("corrections appear iff the crossing is above sqrt(c)") {
  const SpectralModel m = SpectralModel::hilbert_maass(GrossencharParams::from({1.5, -1.5}));
  const double rc = 1.5;
  const Numerator n = Numerator::gaussian(1.0);
  for (double f = 0.8; f <= 1.2001; f += 0.05) {
    if (std::abs(f - 1.0) < 0.02) continue;
    for (double sign : {1.0, -1.0}) {
      const double h = sign * f * rc;
      const cplx end(0.2, 0.3 * sign);
      const ContinuationResult r = continue_integral(n, m, via(h, end));
      CHECK(r.corrections.empty() == (f < 1.0));
    }
  }
}

TEST_CASE("GL2Q continuation picks up the Eisenstein term") {
  const Numerator n = Numerator::eisenstein_product({0, 1}, {0, 1});
  const cplx w(0.3, 0.9);
  ContinuationOptions o;
  o.T = 30;
  for (double h : {0.4, -1.7}) {
    const ContinuationResult r = continue_integral(n, SpectralModel::gl2q(), via(h, w), o);
    REQUIRE(r.corrections.size() == 1);
    CHECK(rel(r.corrections[0].term_value, 4.0 * pi * I * n(w) / (1.0 - 2.0 * w)) < 1e-12);
    LineIntegrandSpec spec{n, SpectralModel::gl2q(), w, 30.0};
    CHECK(rel(r.endpoint_value, direct_line_integral(spec).value + r.corrections[0].term_value) < 1e-10);
  }
}

TEST_CASE("no correction below the branch point") {
  const ContinuationResult r = continue_integral(Numerator::gaussian(1.0), hilbert1(), via(0.5, {0.2, 0.3}));
  CHECK(r.corrections.empty());
  CHECK(r.trace.final_sign == 1);
}

TEST_CASE("continued value matches the regularize-cross-unregularize computation") {
  const Numerator n = Numerator::gaussian(1.0);
  const cplx w(0.2, 2.0);
  const ContinuationResult r = continue_integral(n, hilbert1(), via(2.5, w));
  REQUIRE(r.corrections.size() == 1);
  const cplx oracle = verify::four_step_continuation(n, hilbert1(), w, r.s_end(), 40, 1e-12);
  CHECK(rel(r.endpoint_value, oracle) < 1e-9);

  // returning along Re < 1/2 keeps the branch
  const WPath longer = WPath::from_points({1.2, {1.2, 2.5}, {0.2, 2.5}, w, 0.2});
  const ContinuationResult back = continue_integral(n, hilbert1(), longer);
  CHECK(back.corrections.size() == 1);
  CHECK(rel(back.endpoint_value, verify::four_step_continuation(n, hilbert1(), 0.2, back.s_end(), 40, 1e-12)) < 1e-9);
}

TEST_CASE("double-pole correction carries the derivative term") {
  const SpectralModel m = SpectralModel::gl3_cuspidal(0.0);
  const Numerator n = Numerator::gaussian(1.2);
  const cplx s(-0.2, 0.1);
  const CorrectionTerm c = correction_term(n, m, s);
  const cplx mm = 2.0 * s - 1.0;
  CHECK(c.order == 2);
  CHECK(rel(c.coefficient, 8.0 * pi * I / (36.0 * mm * mm * mm)) < 1e-14);
  CHECK(rel(c.derivative_coefficient, -4.0 * pi * I / (36.0 * mm * mm)) < 1e-14);
  CHECK(rel(c.term_value, c.coefficient * n(s) + c.derivative_coefficient * n.derivative(s)) < 1e-14);
}

TEST_CASE("branching differences") {
  const Numerator n = Numerator::gaussian(1.0);
  const cplx w(0.25, 2.5);
  const BranchingDifference d = branching_difference(n, hilbert1(), w, via(2.0, w), via(0.3, w));
  const cplx s = 0.5 - std::sqrt((w - 0.5) * (w - 0.5) + 1.0);
  CHECK(std::abs(d.expected.s_star - s) < 1e-12);
  CHECK(rel(d.difference, 4.0 * pi * I * n(s) / (1.0 - 2.0 * s)) < 1e-6);

  const SpectralModel gl3 = SpectralModel::gl3_cuspidal(0.0);
  const double rc = 1.0 / (2.0 * std::sqrt(3.0));
  const cplx w3(0.3, 0.5 * rc);
  const BranchingDifference d3 = branching_difference(n, gl3, w3, via(1.5 * rc, w3), via(0.3 * rc, w3));
  const cplx s3 = d3.first.s_end(), m3 = 2.0 * s3 - 1.0;
  const cplx complete = 8.0 * pi * I * n(s3) / (36.0 * m3 * m3 * m3) - 4.0 * pi * I * n.derivative(s3) / (36.0 * m3 * m3);
  CHECK(rel(d3.difference, complete) < 1e-6);
  const verify::OracleContinuation o1 = verify::deformed_contour_continuation(n, gl3, via(1.5 * rc, w3), 40, 1e-12);
  const verify::OracleContinuation o2 = verify::deformed_contour_continuation(n, gl3, via(0.3 * rc, w3), 40, 1e-12);
  CHECK(rel(o1.value - o2.value, complete) < 1e-6);

  BranchingOptions loose;
  loose.require_height_separation = false;
  const BranchingDifference same = branching_difference(n, hilbert1(), {0.2, 0.3}, via(0.6, {0.2, 0.3}),
                                                        via(0.2, {0.2, 0.3}), loose);
  CHECK(std::abs(same.difference) < 1e-12);
  CHECK_THROWS_AS(branching_difference(n, hilbert1(), {0.2, 0.3}, via(0.6, {0.2, 0.3}), via(0.2, {0.2, 0.3})), Error);
}

TEST_CASE("critical line crossings") {
  const auto c = critical_line_crossings(WPath::from_points({{1, 0}, {0, 2}, {1, 2}}));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(2.0));
}
