#pragma once

#include "halfhopf/circle_function.hpp"

namespace halfhopf {

/// Disc automorphism z ↦ μ(z−a)/(āz−1) with |a| < 1 and |μ| = 1.
class MobiusMap {
 public:
  MobiusMap() : MobiusMap(Complex{}, Complex{1.0, 0.0}) {}
  MobiusMap(Complex a, Complex mu);

  Complex a() const noexcept { return a_; }
  Complex mu() const noexcept { return mu_; }

  Complex operator()(Complex z) const;
  /// m_{μa, μ̄}.
  MobiusMap inverse() const;

 private:
  Complex a_;
  Complex mu_;
};

/// outer ∘ inner, renormalized to the (a, μ) form.
MobiusMap compose_maps(const MobiusMap& outer, const MobiusMap& inner);

/// Continuous lift of arg m(e^{iθ}) = arg μ + π + θ + 2·arg(1 − a e^{−iθ}).
double boundary_trace(const MobiusMap& m, double theta);

/// d/dθ boundary_trace = (1−|a|²)/|āe^{iθ}−1|².
double trace_jacobian(const MobiusMap& m, double theta);

struct CompositionConfig {
  /// Grid is oversample·(2·N_out+1) points; at least 4.
  int oversample = 8;
  /// 0 selects 8·N (at least 1).
  int bandwidth_out = 0;
  double max_tail_fraction = 1e-10;
};

/// u∘φ for the boundary trace φ of m, truncated to N_out. The fit reports
/// the discarded mass; ResolutionError when it exceeds the configured share.
SampleFit compose(const CircleFunction& f, const MobiusMap& m, const CompositionConfig& cfg = {});

/// ‖(−Δ)^{1/2}(u∘φ) − |φ′|·((−Δ)^{1/2}u)∘φ‖_{L²}, both sides at N_out.
double naturality_defect(const CircleFunction& f, const MobiusMap& m, const CompositionConfig& cfg = {});

/// 2sin(δ−x) = 2sinδ cos x − 2cosδ sin x.
CircleFunction dilation_field(double delta);

}  // namespace halfhopf
