#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "halfhopf/energy.hpp"
#include "halfhopf/errors.hpp"
#include "halfhopf/flows.hpp"
#include "halfhopf/hopf.hpp"
#include "halfhopf/variation.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace halfhopf;

namespace {

std::vector<Complex> random_zeros(gen::Rng& rng, int count, double radius) {
  std::vector<Complex> zeros;
  for (int j = 0; j < count; ++j) zeros.push_back(rng.in_disc(radius));
  return zeros;
}

// Pointwise | |u|² − 1 | on a fine grid.
double sphere_defect(const CircleFunction& f) {
  double worst = 0.0;
  for (int j = 0; j < 257; ++j) {
    const double t = 2.0 * oracle::pi * j / 257;
    double r2 = 0.0;
    for (int c = 0; c < f.dim(); ++c) r2 += std::norm(oracle::eval(f, t, c));
    worst = std::max(worst, std::abs(r2 - 1.0));
  }
  return worst;
}

CircleFunction perturbed_degree_two() {
  CircleFunction u = blaschke_trace({Complex{0.3, 0.0}, Complex{0.0, -0.25}}, Complex{1.0, 0.0}, 32);
  u.coeff_ref(3, 0) += 0.025;
  u.coeff_ref(-3, 0) += 0.025;
  return u;
}

}  // namespace

TEST_CASE("blaschke examples") {
  CHECK(max_coeff_difference(blaschke_trace({Complex{}}, Complex{1.0, 0.0}, 8), fx::circle().resized(8)) < 1e-15);
  const CircleFunction g =
      blaschke_series({Complex{0.5, 0.0}}, Complex{1.0, 0.0}, 48, BlaschkeNormalization::disc_automorphism);
  CHECK(std::abs(g.coeff(0) - 0.5) < 1e-15);
  for (int k = 1; k <= 48; ++k) CHECK(std::abs(g.coeff(k) + 3.0 * std::pow(2.0, -k - 1)) < 1e-15);
  for (int k = 1; k <= 48; ++k) CHECK(std::abs(g.coeff(-k)) < 1e-15);
  CHECK_THROWS_AS(blaschke_series({Complex{1.0, 0.0}}, Complex{1.0, 0.0}, 16), InputError);
  CHECK_THROWS_AS(blaschke_series({Complex{0.9, 0.0}}, Complex{1.0, 0.0}, 16), ResolutionError);
}

TEST_CASE("blaschke series matches the geometric-series oracle") {
  gen::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Complex> zeros = random_zeros(rng, rng.integer(1, 4), 0.6);
    const Complex mu = rng.unit();
    const CircleFunction g = blaschke_series(zeros, mu, 96);
    const std::vector<Complex> b = oracle::blaschke_series(zeros, mu, 96);
    for (int n = 0; n <= 96; ++n) CHECK(std::abs(g.coeff(n) - b[static_cast<std::size_t>(n)]) < 1e-14);
  }
}

TEST_CASE("realify splits real and imaginary parts") {
  gen::Rng rng(22);
  const CircleFunction g = gen::complex_poly(rng, 5, 1);
  const CircleFunction u = realify(g);
  CHECK(u.is_real());
  CHECK(u.dim() == 2);
  for (double t : {0.0, 1.3, 4.4}) {
    const Complex z = oracle::eval(g, t);
    CHECK(std::abs(oracle::eval(u, t, 0) - z.real()) < 1e-14);
    CHECK(std::abs(oracle::eval(u, t, 1) - z.imag()) < 1e-14);
  }
}

TEST_CASE("blaschke traces are stationary, unit valued and have energy 2π·degree") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Complex> zeros = random_zeros(rng, rng.integer(1, 4), 0.6);
    const Complex mu = rng.unit();
    const CircleFunction u = blaschke_trace(zeros, mu, 96);
    CHECK(fractional_hopf_coeffs(u).max_coeff <= 1e-10);
    CHECK(sphere_defect(u) < 1e-12);
    const double degree = oracle::series_degree(oracle::blaschke_series(zeros, mu, 96));
    CHECK(std::abs(degree - static_cast<double>(zeros.size())) < 1e-12);
    CHECK(std::abs(energy_spectral(u) - 2.0 * oracle::pi * degree) < 1e-8);
  }
}

TEST_CASE("scaling family") {
  gen::Rng rng(24);
  const CircleFunction f = gen::real_poly(rng, 7, 2);
  CHECK(max_coeff_difference(scaling_family(f, 1.0), f) == 0.0);
  CHECK(max_coeff_difference(scaling_family(fx::exp_k(2), 0.5), from_modes(1, false, {{2, {0.25}}})) == 0.0);
  CHECK_THROWS_AS(scaling_family(f, 0.0), InputError);
  CHECK_THROWS_AS(scaling_family(f, 1.5), InputError);

  const double r = 0.7;
  const HopfReport base = fractional_hopf_coeffs(f);
  const HopfReport scaled = fractional_hopf_coeffs(scaling_family(f, r));
  for (int k = 2; k <= 2 * f.bandwidth(); ++k) {
    CHECK(std::abs(scaled.coeff(k) - std::pow(r, k) * base.coeff(k)) <= 1e-14 * (1.0 + std::abs(base.coeff(k))));
  }
  const CircleFunction u = blaschke_trace({Complex{0.2, 0.1}, Complex{-0.4, 0.0}}, Complex{1.0, 0.0}, 64);
  CHECK(fractional_hopf_coeffs(scaling_family(u, 0.35)).max_coeff <= 1e-10);
}

TEST_CASE("sphere projection") {
  const SampleFit twice = sphere_project(stack({fx::cos_k(1, 2.0), fx::sin_k(1, 2.0)}));
  CHECK(max_coeff_difference(twice.function, fx::circle()) < 1e-15);
  const CircleFunction u = blaschke_trace({Complex{0.3, -0.2}}, Complex{1.0, 0.0}, 48);
  const SampleFit same = sphere_project(u);
  CHECK(max_coeff_difference(same.function, u) < 1e-14);
  CHECK(same.tail_fraction < 1e-20);
  CHECK_THROWS_AS(sphere_project(CircleFunction(3, 2, true)), ProjectionError);
  // (cos θ, 0) vanishes at θ = π/2, which is a grid point
  CHECK_THROWS_AS(sphere_project(stack({fx::cos_k(1), CircleFunction(1, 1, true)})), ProjectionError);
}

TEST_CASE("flow from a stationary trace converges immediately") {
  const CircleFunction u = blaschke_trace({Complex{0.4, 0.1}, Complex{-0.2, 0.0}}, Complex{0.0, 1.0}, 48);
  FlowConfig cfg;
  cfg.step = 1.0 / 48;
  const FlowTrajectory t = run_flow(u, cfg);
  CHECK(t.converged);
  REQUIRE(t.records.size() == 1);
  CHECK(t.records[0].iteration == 0);
  CHECK(t.records[0].tangential_residual <= cfg.tol);
}

TEST_CASE("flow with zero step keeps a constant trajectory") {
  FlowConfig cfg;
  cfg.step = 0.0;
  cfg.max_iter = 5;
  const FlowTrajectory t = run_flow(perturbed_degree_two(), cfg);
  CHECK(!t.converged);
  REQUIRE(t.records.size() == 6);
  for (const FlowRecord& r : t.records) {
    CHECK(r.energy == t.records[0].energy);
    CHECK(r.tangential_residual == t.records[0].tangential_residual);
  }
}

TEST_CASE("flow from a perturbed trace descends to a stationary point") {
  FlowConfig cfg;
  cfg.step = 1.0 / 32;
  const FlowTrajectory t = run_flow(perturbed_degree_two(), cfg);
  REQUIRE(t.converged);
  for (std::size_t j = 1; j < t.records.size(); ++j) CHECK(t.records[j].energy <= t.records[j - 1].energy);
  const FlowRecord& last = t.records.back();
  CHECK(last.tangential_residual <= 1e-6);
  CHECK(last.stationarity <= 1e-6);
  CHECK(std::abs(last.energy - 4.0 * oracle::pi) < 1e-3);
  const BalancingDefect b = balancing_defect(t.final);
  CHECK(b.squared_norms <= 1e-5);
  CHECK(b.cross <= 1e-5);
}

TEST_CASE("flow rejects bad configurations") {
  FlowConfig cfg;
  cfg.step = 0.5;
  CHECK_THROWS_AS(run_flow(perturbed_degree_two(), cfg), InputError);
  cfg.step = 1.0 / 32;
  CHECK_THROWS_AS(run_flow(CircleFunction(4, 2, true), cfg), ProjectionError);
  CHECK_THROWS_AS(run_flow(fx::exp_k(1), cfg), InputError);
}

TEST_CASE("trajectory csv") {
  FlowConfig cfg;
  cfg.step = 0.0;
  cfg.max_iter = 2;
  std::ostringstream out;
  write_trajectory_csv(out, run_flow(perturbed_degree_two(), cfg));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "iteration,energy,tangential_residual,stationarity_residual");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
}
