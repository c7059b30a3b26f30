#pragma once

#include <iosfwd>
#include <vector>

#include "halfhopf/circle_function.hpp"

namespace halfhopf {

/// Factor convention for each zero a of a Blaschke product.
enum class BlaschkeNormalization {
  /// (z − a)/(1 − āz); B(z) = z for a single zero at the origin.
  classical,
  /// (z − a)/(āz − 1), the disc automorphism with μ = 1.
  disc_automorphism,
};

/// Power-series coefficients b_0..b_N of μ·Π_j factor(a_j) as a complex
/// scalar function (negative frequencies zero). Computed by sampling and
/// transforming; ResolutionError when the discrete spectrum above N exceeds
/// 1e−14.
CircleFunction blaschke_series(const std::vector<Complex>& zeros, Complex mu, int bandwidth,
                               BlaschkeNormalization normalization = BlaschkeNormalization::classical);

/// Complex scalar g ↦ real ℝ²-valued (Re g, Im g).
CircleFunction realify(const CircleFunction& g);

/// Real ℝ²-valued boundary trace of the Blaschke product; exactly stationary.
CircleFunction blaschke_trace(const std::vector<Complex>& zeros, Complex mu, int bandwidth,
                              BlaschkeNormalization normalization = BlaschkeNormalization::classical);

/// û(n) ↦ r^{|n|}û(n), r ∈ (0, 1].
CircleFunction scaling_family(const CircleFunction& f, double r);

struct ProjectionConfig {
  int oversample = 8;
  /// 0 keeps the input bandwidth.
  int bandwidth_out = 0;
  /// Samples shorter than this make the projection undefined.
  double min_norm = 1e-8;
};

/// Pointwise normalization u/|u| on an oversampled grid, refitted.
/// ProjectionError when some sample is (nearly) zero.
SampleFit sphere_project(const CircleFunction& f, const ProjectionConfig& cfg = {});

struct FlowConfig {
  double step = 1.0 / 32.0;
  int max_iter = 50000;
  /// Target for ‖P_T(−Δ)^{1/2}u‖_{L²}.
  double tol = 1e-6;
  int oversample = 8;
  /// 0 keeps the bandwidth of f0.
  int bandwidth = 0;
  /// Accepted energy increase, relative to 1 + E.
  double energy_slack = 1e-12;
  /// Step halvings tried before an energy increase is fatal.
  int max_halvings = 20;
};

struct FlowRecord {
  int iteration = 0;
  double energy = 0.0;
  double tangential_residual = 0.0;
  double stationarity = 0.0;
  /// Step used to leave this iterate (0 on the last record).
  double step = 0.0;
  int halvings = 0;
};

struct FlowTrajectory {
  std::vector<FlowRecord> records;
  CircleFunction final;
  bool converged = false;
};

/// u ← sphere_project(u − τ·P_T(−Δ)^{1/2}u) with P_T v = v − (v·u)u/|u|²
/// evaluated on the oversampled grid. Halves τ on energy increase and throws
/// FlowError once max_halvings is exhausted. step·bandwidth must not exceed 1.
FlowTrajectory run_flow(const CircleFunction& f0, const FlowConfig& cfg);

/// CSV with header iteration,energy,tangential_residual,stationarity_residual.
void write_trajectory_csv(std::ostream& out, const FlowTrajectory& trajectory);

}  // namespace halfhopf
