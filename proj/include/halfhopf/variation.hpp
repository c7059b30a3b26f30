#pragma once

#include <string>
#include <vector>

#include "halfhopf/circle_function.hpp"

namespace halfhopf {

/// 𝒱½(u) = (−Δ)^{1/2}u·u′, bandwidth 2N, by exact convolution.
CircleFunction inner_variation(const CircleFunction& f);

/// ∫ v X = 2π Σ v̂(n)X̂(−n), both scalar; real part for real inputs.
double pair_with_field(const CircleFunction& v, const CircleFunction& field);

struct FlowResampling {
  /// Grid is oversample·(2·N_out+1) points.
  int oversample = 8;
  /// N_out = out_factor·N (at least 1).
  int out_factor = 8;
  /// RK4 substeps per unit of |t|/h; the flow over ±h uses this many steps.
  int substeps = 8;
  double max_tail_fraction = 1e-10;
};

/// φ_t(θ) for the flow of the real scalar field X, classical RK4 with the
/// given number of equal steps.
double integrate_field_flow(const CircleFunction& field, double theta, double t, int steps);

/// Central difference (E½(u∘φ_h) − E½(u∘φ_{−h}))/(2h) along the flow of X.
/// Throws ResolutionError when u∘φ_{±h} leaves the resampling bandwidth.
double directional_energy_derivative(const CircleFunction& f, const CircleFunction& field, double h,
                                     const FlowResampling& cfg = {});

/// First-moment defects | |∫u cos|² − |∫u sin|² | and |(∫u cos)·(∫u sin)|.
struct BalancingDefect {
  double squared_norms = 0.0;
  double cross = 0.0;
};

BalancingDefect balancing_defect(const CircleFunction& f);

/// ∫ u′·(−Δ)^{1/2}u · sin(δ−x) dx from the frequency ±1 coefficients of
/// u′·(−Δ)^{1/2}u; vanishes for every u.
double pohozaev_residual(const CircleFunction& f, double delta);

/// ∫ u′·(−Δ)^{1/2}u dx; vanishes for every u.
double rotation_pohozaev(const CircleFunction& f);

/// R = d/dx((−Δ)^{1/2}u·u X) − D_{1/2}(u′X, u) − 2𝒱½(u)X. R ≡ 0 for every u
/// when X lies in span{1, cos x, sin x}. With conformal_flag set, an X of
/// bandwidth above 1 is rejected.
CircleFunction noether_residual(const CircleFunction& f, const CircleFunction& field, bool conformal_flag);

/// ‖d/dx((−Δ)^{1/2}u·u X) − D_{1/2}(u′X, u)‖_{L²}; zero at stationary u for
/// conformal X.
double conservation_residual(const CircleFunction& f, const CircleFunction& field);

struct ContinuityRow {
  int truncation = 0;
  /// ⟨𝒱½(u_N), X⟩ for each probe field.
  std::vector<double> pairings;
  /// Homogeneous H^{1/2} norm of u − u_N.
  double tail = 0.0;
  /// max over fields of |a_j − a_{j−1}|; zero on the first row.
  double step = 0.0;
};

struct ContinuityProbe {
  std::vector<ContinuityRow> rows;
  /// max_j step_{j+1} / tail_j over rows with positive tail.
  double fitted_constant = 0.0;
};

/// Pairings of the inner variation of successive truncations of f.
/// Default fields are sin 2x and cos 2x + sin 3x.
ContinuityProbe variation_continuity_probe(const CircleFunction& f, const std::vector<int>& truncations,
                                           const std::vector<CircleFunction>& fields = {});

struct NamedResidual {
  std::string field;
  double value = 0.0;
};

struct PohozaevEntry {
  double delta = 0.0;
  double value = 0.0;
};

struct ResidualReport {
  double stationarity = 0.0;
  double stationarity_weighted = 0.0;
  double variation_l2 = 0.0;
  BalancingDefect balancing;
  std::vector<PohozaevEntry> pohozaev;
  double rotation_pohozaev = 0.0;
  /// Conservation-law residual for 1 and 2sin(δ−x) at each δ.
  std::vector<NamedResidual> noether;
};

ResidualReport residual_report(const CircleFunction& f, const std::vector<double>& deltas);

}  // namespace halfhopf
