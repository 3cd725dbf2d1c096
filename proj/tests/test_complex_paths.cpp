#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "branching/complex_paths.hpp"
#include "branching/errors.hpp"

using namespace branching;

TEST_CASE("sample_path interpolates linearly") {
  const CurveSamples s = sample_path(WPath::from_points({{1, 0}, {1, 1}}), 0.5);
  REQUIRE(s.size() == 3);
  CHECK(std::abs(s[0] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(s[1] - cplx(1, 0.5)) < 1e-15);
  CHECK(std::abs(s[2] - cplx(1, 1)) < 1e-15);

  const CurveSamples two = sample_path(WPath::from_points({{0, 0}, {1, 0}, {1, 1}}), 0.25);
  CHECK(two.size() == 9);
  for (std::size_t k = 1; k < two.size(); ++k) CHECK(std::abs(two[k] - two[k - 1]) <= 0.25 + 1e-15);
}

TEST_CASE("paths need two distinct points") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  };
  CHECK(kind_of([] { WPath::from_points({{2, 0}}); }) == ErrorKind::invalid_path);
  CHECK(kind_of([] { WPath::from_points({{2, 0}, {2, 0}}); }) == ErrorKind::invalid_path);
}

TEST_CASE("track_sqrt on a constant radicand") {
  CurveSamples r;
  r.samples.assign(20, cplx(4.0));
  const BranchTrace t = track_sqrt(r, +1);
  CHECK(t.cut_crossings == 0);
  CHECK(t.final_sign == 1);
  for (const cplx& z : t.sqrt_samples.samples) CHECK(std::abs(z - 2.0) < 1e-15);
}

TEST_CASE("monodromy around the unit circle") {
  CurveSamples r;
  const int n = 64;
  for (int k = 0; k <= n; ++k) r.samples.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
  const BranchTrace t = track_sqrt(r, +1);
  CHECK(std::abs(t.sqrt_samples.samples.back() + 1.0) < 1e-12);
  CHECK(std::abs(t.cut_crossings) == 1);
  CHECK(t.final_sign == -1);
  CHECK(t.is_continuous());
  CHECK(t.max_square_defect() < 1e-14);

  // coarse samples still come out continuous after refinement
  CurveSamples coarse;
  for (int k = 0; k <= 3; ++k) coarse.samples.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 3));
  const BranchTrace c = track_sqrt(coarse, +1);
  CHECK(c.final_sign == -1);
  CHECK(c.is_continuous());
}

TEST_CASE("radicand parabola with |t| = 1, alpha = 2") {
  const RadicandCurve rc = radicand_curve(1.0, 2.0, {1.0, -1.0}, 0.01);
  CHECK(std::abs(rc.curve.samples.front() - cplx(-2, 4)) < 1e-14);
  for (const cplx& z : rc.curve.samples) CHECK(rc.parabola.residual(z) < 1e-12);
  const BranchTrace t = track_sqrt(rc.curve, +1);
  CHECK(t.cut_crossings == 1);
  CHECK(t.final_sign == -1);
}

TEST_CASE("alpha = 1 parabola passes through the origin") {
  const RadicandCurve rc = radicand_curve(1.0, 1.0, {1.0, -1.0}, 0.5);
  CHECK(rc.parabola.a2 == doctest::Approx(0.25));
  CHECK(rc.parabola.c0 == doctest::Approx(0.0));
  CHECK(rc.parabola.residual({0.25, 1.0}) < 1e-15);
}

TEST_CASE("trivial-character parabola") {
  const double to = 1.7;
  const RadicandCurve rc = radicand_curve_trivial(to, {2.0, -2.0}, 0.05);
  for (const cplx& z : rc.curve.samples) {
    const double y = z.imag();
    CHECK(z.real() == doctest::Approx((y - 2 * to * to) * (y + 2 * to * to) / (4 * to * to)).epsilon(1e-12));
  }
}

TEST_CASE("crosses_origin") {
  CHECK_FALSE(crosses_origin(1.0, 0.5));
  CHECK(crosses_origin(1.0, 2.0));
  CHECK(crosses_origin(3.0, -1.5));
  const RadicandCurve rc = radicand_curve(3.0, -1.5, {9.0, -9.0}, 0.05);
  CHECK(track_sqrt(rc.curve, +1).cut_crossings % 2 != 0);
  CHECK_THROWS_AS(crosses_origin(1.0, 1.0), Error);
}

TEST_CASE("csv and svg writers") {
  CurveSamples s;
  s.samples = {{0.1, -2}, {1, 0.5}};
  std::ostringstream out;
  write_csv(out, s);
  CHECK(out.str().find("0,0.10000000000000001,-2") != std::string::npos);
  const std::string svg = polyline_svg(s);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
}
