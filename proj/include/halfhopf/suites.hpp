#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "halfhopf/circle_function.hpp"
#include "halfhopf/io.hpp"

namespace halfhopf {

/// Real trig polynomial with independent Gaussian coefficients of scale
/// (1+|n|)^{−decay}; exactly conjugate-symmetric.
CircleFunction random_trig_polynomial(std::mt19937_64& rng, int bandwidth, int dim, double decay = 1.5);

/// Complex scalar variant, no symmetry.
CircleFunction random_complex_polynomial(std::mt19937_64& rng, int bandwidth, double decay = 1.5);

/// Zeros drawn uniformly from the disc of radius max_radius.
std::vector<Complex> random_zeros(std::mt19937_64& rng, int count, double max_radius);

/// Worker count: hardware concurrency capped by HALFHOPF_THREADS.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct CheckSummary {
  std::string name;
  double worst = 0.0;
  double limit = 0.0;
  std::uint64_t worst_seed = 0;
  std::size_t evaluations = 0;
};

struct SuiteFailure {
  std::string check;
  std::uint64_t seed = 0;
  double value = 0.0;
  double limit = 0.0;
  Json input;
};

struct SuiteResult {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckSummary> checks;
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Suite names accepted by run_suite; "all" runs each of them.
const std::vector<std::string>& suite_names();

/// Trial i draws its inputs from std::mt19937_64(seed + i). Results are
/// merged in trial order, so reports do not depend on the thread count.
std::vector<SuiteResult> run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

Json to_json(const SuiteResult& r);

}  // namespace halfhopf
