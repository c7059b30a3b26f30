#include <doctest.h>

#include <cmath>

#include "halfhopf/circle_function.hpp"
#include "halfhopf/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace halfhopf;

namespace {

Samples samples_of(int dim, bool real, int m, const std::function<std::vector<Complex>(double)>& g) {
  Samples s;
  s.dim = dim;
  s.real = real;
  for (int j = 0; j < m; ++j) {
    const auto v = g(grid_angle(static_cast<std::size_t>(j), static_cast<std::size_t>(m)));
    s.values.insert(s.values.end(), v.begin(), v.end());
  }
  return s;
}

}  // namespace

TEST_CASE("from_samples recovers a constant vector") {
  const auto s = samples_of(2, true, 8, [](double) { return std::vector<Complex>{1.0, 0.0}; });
  const CircleFunction f = from_samples(s, 2);
  CHECK(std::abs(f.coeff(0, 0) - 1.0) < 1e-15);
  for (int n = -2; n <= 2; ++n) {
    if (n != 0) CHECK(std::abs(f.coeff(n, 0)) < 1e-15);
    CHECK(std::abs(f.coeff(n, 1)) < 1e-15);
  }
}

TEST_CASE("from_samples of cos on eight points") {
  const auto s = samples_of(1, true, 8, [](double t) { return std::vector<Complex>{std::cos(t)}; });
  const CircleFunction f = from_samples(s, 2);
  CHECK(std::abs(f.coeff(1) - 0.5) < 1e-15);
  CHECK(std::abs(f.coeff(-1) - 0.5) < 1e-15);
  CHECK(std::abs(f.coeff(0)) < 1e-15);
  CHECK(std::abs(f.coeff(2)) < 1e-15);
  CHECK(f.hermitian_defect() == 0.0);
}

TEST_CASE("from_samples rejects content above the band") {
  const auto s = samples_of(1, false, 8, [](double t) { return std::vector<Complex>{std::exp(Complex{0.0, 3.0 * t})}; });
  CHECK_THROWS_AS(from_samples(s, 2), ResolutionError);
  CHECK(fit_samples(s, 2).tail_fraction > 0.99);
}

TEST_CASE("from_samples rejects too few samples") {
  const auto s = samples_of(1, true, 4, [](double) { return std::vector<Complex>{1.0}; });
  CHECK_THROWS_AS(from_samples(s, 2), InputError);
}

TEST_CASE("to_samples evaluates cos on four points") {
  const Samples s = to_samples(fx::cos_k(1), 4);
  const double expected[] = {1.0, 0.0, -1.0, 0.0};
  for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(s.at(j)[0] - expected[j]) < 1e-15);
}

TEST_CASE("to_samples of zero and of a constant") {
  const Samples z = to_samples(CircleFunction(3, 2, true), 7);
  for (const auto& v : z.values) CHECK(v == Complex{});
  const Samples c = to_samples(constant_function({2.0, 3.0}, true), 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(c.at(j)[0] == Complex{2.0, 0.0});
    CHECK(c.at(j)[1] == Complex{3.0, 0.0});
  }
}

TEST_CASE("to_samples agrees with direct summation") {
  gen::Rng rng(11);
  const CircleFunction f = gen::complex_poly(rng, 9, 2);
  const Samples s = to_samples(f, 31);
  for (std::size_t j = 0; j < 31; ++j) {
    for (int c = 0; c < 2; ++c) {
      CHECK(std::abs(s.at(j)[static_cast<std::size_t>(c)] - oracle::eval(f, grid_angle(j, 31), c)) < 1e-13);
    }
  }
}

TEST_CASE("fit_samples matches the brute-force DFT") {
  gen::Rng rng(12);
  const CircleFunction f = gen::real_poly(rng, 6, 1);
  const auto g = [&](double t) { return oracle::eval(f, t).real() + std::cos(9.0 * t); };
  const auto s = samples_of(1, true, 40, [&](double t) { return std::vector<Complex>{g(t)}; });
  const SampleFit fit = fit_samples(s, 6);
  for (int n = -6; n <= 6; ++n) {
    CHECK(std::abs(fit.function.coeff(n) - oracle::dft([&](double t) { return Complex{g(t)}; }, n, 40)) < 1e-14);
  }
  CHECK(fit.tail_fraction > 0.0);
}

TEST_CASE("round trip is the identity at M = 2N+1") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    gen::Rng rng(seed);
    const int big_n = rng.integer(0, 64);
    const CircleFunction f = gen::real_poly(rng, big_n, rng.integer(1, 3));
    const CircleFunction g = from_samples(to_samples(f, static_cast<std::size_t>(2 * big_n + 1)), big_n);
    double scale = 0.0;
    for (const auto& v : f.data()) scale = std::max(scale, std::abs(v));
    CHECK_MESSAGE(max_coeff_difference(f, g) <= 1e-12 * scale, "seed " << seed);
    CHECK(g.hermitian_defect() == 0.0);
  }
}

TEST_CASE("Parseval against trapezoid quadrature") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    gen::Rng rng(seed);
    const int big_n = rng.integer(1, 32);
    const CircleFunction f = gen::real_poly(rng, big_n, 2);
    const Complex quad = oracle::trapezoid(
        [&](double t) { return Complex{std::norm(oracle::eval(f, t, 0)) + std::norm(oracle::eval(f, t, 1))}; },
        2 * big_n + 1 + 5);
    const double l2 = l2_norm(f);
    CHECK_MESSAGE(std::abs(quad.real() - l2 * l2) <= 1e-12 * l2 * l2, "seed " << seed);
  }
}

TEST_CASE("pointwise_dot examples") {
  const CircleFunction sq = pointwise_dot(fx::cos_k(1), fx::cos_k(1));
  CHECK(sq.bandwidth() == 2);
  CHECK(std::abs(sq.coeff(0) - 0.5) < 1e-16);
  CHECK(std::abs(sq.coeff(2) - 0.25) < 1e-16);
  CHECK(std::abs(sq.coeff(-2) - 0.25) < 1e-16);
  CHECK(std::abs(sq.coeff(1)) < 1e-16);

  const CircleFunction frame = pointwise_dot(fx::circle(), stack({-1.0 * fx::sin_k(1), fx::cos_k(1)}));
  CHECK(max_coeff_difference(frame, CircleFunction(2, 1, true)) < 1e-16);

  const CircleFunction e2 = pointwise_dot(fx::exp_k(1), fx::exp_k(1));
  CHECK(max_coeff_difference(e2, fx::exp_k(2)) == 0.0);

  CHECK_THROWS_AS(pointwise_dot(fx::circle(), fx::cos_k(1)), InputError);
}

TEST_CASE("pointwise_dot is symmetric and bilinear with bounded bandwidth") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    gen::Rng rng(seed);
    const int dim = rng.integer(1, 3);
    const CircleFunction f = gen::complex_poly(rng, rng.integer(0, 10), dim);
    const CircleFunction g = gen::complex_poly(rng, rng.integer(0, 10), dim);
    const CircleFunction h = gen::complex_poly(rng, rng.integer(0, 10), dim);
    const CircleFunction fg = pointwise_dot(f, g);
    CHECK(fg.bandwidth() == f.bandwidth() + g.bandwidth());
    CHECK(max_coeff_difference(fg, pointwise_dot(g, f)) < 1e-14);
    const CircleFunction lin = pointwise_dot(2.5 * f + h, g);
    CHECK(max_coeff_difference(lin, 2.5 * fg + pointwise_dot(h, g)) < 1e-13);
    // pointwise values agree with the product of direct evaluations
    const double t = rng.angle();
    Complex direct{};
    for (int c = 0; c < dim; ++c) direct += oracle::eval(f, t, c) * oracle::eval(g, t, c);
    CHECK(std::abs(oracle::eval(fg, t) - direct) < 1e-12);
  }
}

TEST_CASE("coefficients outside the band read as zero") {
  const CircleFunction f = fx::cos_k(2);
  CHECK(f.coeff(3) == Complex{});
  CHECK(f.coeff(-7) == Complex{});
  CircleFunction g = f;
  CHECK_THROWS_AS(g.coeff_ref(3), InputError);
}

TEST_CASE("real flag requires conjugate symmetry") {
  CHECK_THROWS_AS(from_modes(1, true, {{1, {1.0}}}), InputError);
  CHECK_NOTHROW(from_modes(1, false, {{1, {1.0}}}));
}

TEST_CASE("rotation shifts the argument") {
  gen::Rng rng(5);
  const CircleFunction f = gen::real_poly(rng, 7, 2);
  const double alpha = 0.83;
  const CircleFunction g = rotate(f, alpha);
  for (double t : {0.0, 1.1, 4.0}) {
    CHECK(std::abs(oracle::eval(g, t, 1) - oracle::eval(f, t + alpha, 1)) < 1e-13);
  }
}

TEST_CASE("integrate_product and integrate") {
  CHECK(std::abs(integrate_product(fx::cos_k(1), fx::cos_k(1)) - oracle::pi) < 1e-15);
  CHECK(std::abs(integrate_product(fx::cos_k(1), fx::sin_k(1))) < 1e-15);
  CHECK(std::abs(integrate(constant_function({3.0}, true))[0] - 6.0 * oracle::pi) < 1e-14);
}

TEST_CASE("resample_at along a rotation reproduces rotate") {
  gen::Rng rng(6);
  const CircleFunction f = gen::real_poly(rng, 5, 1);
  std::vector<double> angles(23);
  for (std::size_t j = 0; j < angles.size(); ++j) angles[j] = grid_angle(j, angles.size()) + 0.4;
  const SampleFit fit = resample_at(f, angles, 5);
  CHECK(max_coeff_difference(fit.function, rotate(f, 0.4)) < 1e-14);
  CHECK(fit.tail_fraction < 1e-14);
}
