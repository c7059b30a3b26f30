#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include "halfhopf/errors.hpp"
#include "halfhopf/io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace halfhopf;

namespace {

// Message of the InputError thrown by decoding, or "" when it decodes.
std::string decode_error(const std::string& text) {
  try {
    circle_function_from_json(Json::parse(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& message, const std::string& part) { return message.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("circle functions round trip through json") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const CircleFunction f = gen::real_poly(rng, rng.integer(0, 9), rng.integer(1, 3));
    const Json j = to_json(f);
    CHECK(j["coeffs"].size() == static_cast<std::size_t>(2 * f.bandwidth() + 1));
    CHECK(j["coeffs"][0][0] == -f.bandwidth());
    // text round trip: nlohmann prints doubles with round-trip precision
    const CircleFunction g = circle_function_from_json(Json::parse(j.dump()));
    CHECK(max_coeff_difference(f, g) == 0.0);
    CHECK(g.is_real());
  }
  const CircleFunction z = gen::complex_poly(rng, 4, 2);
  const CircleFunction back = circle_function_from_json(Json::parse(to_json(z).dump()));
  CHECK(!back.is_real());
  CHECK(max_coeff_difference(z, back) == 0.0);
}

TEST_CASE("decoding the documented layout") {
  const std::string text = R"({"bandwidth": 1, "dim": 2, "real": true,
    "coeffs": [[-1, [[0.5, 0], [0, 0.5]]], [0, [[0, 0], [0, 0]]], [1, [[0.5, 0], [0, -0.5]]]]})";
  const CircleFunction f = circle_function_from_json(Json::parse(text));
  CHECK(max_coeff_difference(f, fx::circle()) == 0.0);
  // unlisted modes are zero
  const CircleFunction g = circle_function_from_json(Json::parse(R"({"bandwidth": 3, "dim": 1, "real": false,
    "coeffs": [[2, [[1, 0]]]]})"));
  CHECK(max_coeff_difference(g, from_modes(1, false, {{2, {1.0}}}).resized(3)) == 0.0);
}

TEST_CASE("malformed inputs name the offending field") {
  CHECK(mentions(decode_error("[1, 2]"), "<root>"));
  CHECK(mentions(decode_error(R"({"dim": 1, "real": true, "coeffs": []})"), "bandwidth"));
  CHECK(mentions(decode_error(R"({"bandwidth": -1, "dim": 1, "real": true, "coeffs": []})"), "bandwidth"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1.5, "dim": 1, "real": true, "coeffs": []})"), "bandwidth"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 0, "real": true, "coeffs": []})"), "dim"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": 1, "coeffs": []})"), "real"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": true, "coeffs": {}})"), "coeffs"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": true, "coeffs": [], "extra": 0})"), "extra"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": false, "coeffs": [[2, [[1, 0]]]]})"),
                 "coeffs[0][0]"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": false,
    "coeffs": [[1, [[1, 0]]], [1, [[1, 0]]]]})"),
                 "coeffs[1][0]"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 2, "real": false, "coeffs": [[1, [[1, 0]]]]})"),
                 "coeffs[0][1]"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": false, "coeffs": [[1, [[1, "x"]]]]})"),
                 "coeffs[0][1][0]"));
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": false, "coeffs": [[1, [[1]]]]})"),
                 "coeffs[0][1][0]"));
  // real functions must be conjugate symmetric
  CHECK(mentions(decode_error(R"({"bandwidth": 1, "dim": 1, "real": true, "coeffs": [[1, [[1, 0]]]]})"),
                 "conjugate symmetry"));
  CHECK(mentions(decode_error(R"({"bandwidth": 0, "dim": 1, "real": true, "coeffs": [[0, [[1, 0.5]]]]})"),
                 "conjugate symmetry"));
}

TEST_CASE("reading files") {
  const auto dir = std::filesystem::temp_directory_path() / "halfhopf_io_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.json";
  std::ofstream(good) << to_json(fx::witness()).dump(2);
  CHECK(max_coeff_difference(read_circle_function(good.string()), fx::witness()) == 0.0);

  const auto broken = dir / "broken.json";
  std::ofstream(broken) << "{\n  \"bandwidth\": 1,\n  \"dim\": \n}";
  try {
    read_circle_function(broken.string());
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(mentions(e.what(), broken.string()));
    CHECK(mentions(e.what(), "line 4"));
  }
  CHECK_THROWS_AS(read_circle_function((dir / "missing.json").string()), InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("mobius maps round trip") {
  const MobiusMap m(Complex{0.25, -0.5}, std::polar(1.0, 0.3));
  const Json j = to_json(m);
  CHECK(j["a"] == Json::array({0.25, -0.5}));
  const MobiusMap back = mobius_from_json(Json::parse(j.dump()));
  CHECK(back.a() == m.a());
  CHECK(back.mu() == m.mu());
  CHECK_THROWS_AS(mobius_from_json(Json::parse(R"({"a": [1.0, 0.0], "mu": [1.0, 0.0]})")), InputError);
  CHECK_THROWS_AS(mobius_from_json(Json::parse(R"({"a": [0.0, 0.0]})")), InputError);
}

TEST_CASE("non-finite detection") {
  CHECK(!contains_non_finite(to_json(fx::circle())));
  Json j = {{"x", Json::array({1.0, {{"y", std::numeric_limits<double>::quiet_NaN()}}})}};
  CHECK(contains_non_finite(j));
  CHECK(contains_non_finite(Json::array({std::numeric_limits<double>::infinity()})));
}
