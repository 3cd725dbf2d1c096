#include <doctest.h>

#include "branching/errors.hpp"
#include "branching/json_io.hpp"

using namespace branching;

TEST_CASE("model descriptors round-trip") {
  const SpectralModel m = model_from_json(json::parse(R"({"kind":"HilbertMaass","t":[1,-1]})"));
  CHECK(m.radicand_offset().real() == doctest::Approx(1.0));
  const json j = model_to_json(m);
  CHECK(j["kind"] == "HilbertMaass");
  CHECK(model_from_json(j).radicand_offset() == m.radicand_offset());
  CHECK(model_from_json(json::parse(R"({"kind":"GL3Cuspidal","t_f":[0,-0.25]})")).t_f() == cplx(0, -0.25));
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"kind":"GL2Q","a":2})")), Error);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"kind":"GL4"})")), Error);
  CHECK_THROWS_AS(model_from_json(json::parse(R"({"kind":"HilbertMaass","t":[1,1]})")), Error);
}

TEST_CASE("numerator descriptors") {
  const Numerator g = numerator_from_json(json::parse(R"({"kind":"gaussian","width":2})"));
  CHECK(g.width() == 2.0);
  CHECK(numerator_to_json(g)["kind"] == "gaussian");
  const Numerator e = numerator_from_json(json::parse(R"({"kind":"eisenstein_product_gl2","z0":[0,1],"z":[0.1,1.2]})"));
  CHECK(e.z().x == 0.1);
  CHECK_THROWS_AS(numerator_from_json(json::parse(R"({"kind":"gaussian"})")), Error);
}

TEST_CASE("paths and complex numbers") {
  const WPath p = parse_path("1.2,0; 1.2,1.5 ;0.2,1.5");
  REQUIRE(p.points.size() == 3);
  CHECK(p.points[1] == cplx(1.2, 1.5));
  CHECK(parse_complex("0.25") == cplx(0.25));
  CHECK_THROWS_AS(parse_complex("1,x"), Error);
  CHECK_THROWS_AS(parse_path("1,0"), Error);
}

TEST_CASE("17 digit writer") {
  json j;
  j["x"] = 0.1;
  j["z"] = complex_to_json({1.0, -2.5});
  const std::string s = dump_json(j);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("[1, -2.5]") != std::string::npos);
  CHECK(dump_json(j) == s);
}
