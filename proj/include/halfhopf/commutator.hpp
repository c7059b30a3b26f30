#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "halfhopf/circle_function.hpp"

namespace halfhopf {

/// D_s(a,b) = (−Δ)^s a·b − (−Δ)^s b·a for s ∈ (0, 1/2]. Vector inputs of
/// equal dimension are contracted with the dot product.
CircleFunction d_s(const CircleFunction& a, const CircleFunction& b, double s);

/// [(−Δ)^s, a]φ = (−Δ)^s(aφ) − a·(−Δ)^sφ, scalar a and φ.
CircleFunction commutator_apply(const CircleFunction& a, const CircleFunction& phi, double s);

/// One evaluation of an estimate lhs ≤ cap·rhs_bound.
struct EstimateProbe {
  double s = 0.0;
  double lhs = 0.0;
  double rhs_bound = 0.0;
  double ratio = 0.0;
  double constant_cap = 0.0;
  /// lhs > 0 with rhs_bound = 0, or ratio above the cap.
  bool violated = false;
};

/// 2π·3^{1−2s}·√(1+s²).
double commutator_cap(double s);

/// lhs = ‖[(−Δ)^s, φ]a‖_{L²}, rhs = ‖φ′‖_𝔸·‖a‖_{H^{2s−1}} with
/// ‖a‖_{H^σ} = (Σ(1+n²)^σ|â(n)|²)^{1/2}; s ∈ (0, 1/2). The mean of a
/// enters both sides, so constant a gives a finite ratio.
EstimateProbe probe_commutator_bound(const CircleFunction& a, const CircleFunction& phi, double s);

/// 2π·√(3/2 + 4).
double duality_cap();

/// lhs = |∫D_{1/2}(a,b)φ|, rhs = ‖(−Δ)^{3/4}φ‖_𝔸·‖a‖_{H^{−1/2}}·‖b‖_{H^{1/2}} with
/// the coefficient norms ‖a‖_{H^σ} = (Σ(1+n²)^σ|â(n)|²)^{1/2}.
EstimateProbe probe_duality_bound(const CircleFunction& a, const CircleFunction& b, const CircleFunction& phi);

/// Band-limited kernel with K̂(0) = 0 and K̂(n) = −|n|^{2s}/(2π) for
/// 0 < |n| ≤ N, so that ∫(φ(x)−φ(y))K(x−y)dy = (−Δ)^sφ(x) for every
/// trig polynomial φ of degree ≤ N.
CircleFunction surrogate_kernel(double s, int bandwidth);

/// x ↦ ∫(φ(x)−φ(y))K(x−y)dy by the M-point trapezoid rule in y, fitted back
/// to the bandwidth of φ. Exact once M > N_φ + N_K.
CircleFunction kernel_apply(const CircleFunction& phi, const CircleFunction& kernel, int m);

/// ∬ a(x)b(y)(φ(x)−φ(y))K^s(x−y) dx dy on an M×M trapezoid grid with the
/// surrogate kernel at band N_a+N_b+N_φ. Equals ∫D_s(a,b)φ when
/// M ≥ 2(N_a+N_b+N_φ)+1; smaller M is rejected.
Complex fractional_divergence_pairing(const CircleFunction& a, const CircleFunction& b, const CircleFunction& phi,
                                      double s, int m);

struct ProbeRow {
  EstimateProbe probe;
  std::uint64_t seed = 0;
};

/// CSV with header s,lhs,rhs,ratio,cap,seed.
void write_probe_csv(std::ostream& out, const std::vector<ProbeRow>& rows);

}  // namespace halfhopf
