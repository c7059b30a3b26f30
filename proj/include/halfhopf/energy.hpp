#pragma once

#include <vector>

#include "halfhopf/circle_function.hpp"

namespace halfhopf {

/// E½(u) = ∫|(−Δ)^{1/4}u|² = 2π Σ|n||û(n)|².
double energy_spectral(const CircleFunction& f);

/// (1/2π)∬|u(x)−u(y)|² / |e^{ix}−e^{iy}|² dx dy by the product trapezoid
/// rule with x on θ_j and y on the half-cell shifted grid, so the diagonal
/// is never hit. Needs M ≥ 4N.
double energy_gagliardo(const CircleFunction& f, int m);

struct SobolevNorm {
  /// (Σ (1+n²)^s |û(n)|²)^{1/2}
  double inhomogeneous = 0.0;
  /// (Σ_{n≠0} |n|^{2s} |û(n)|²)^{1/2}
  double homogeneous = 0.0;
};

SobolevNorm sobolev_norm(const CircleFunction& f, double s);

/// Σ_n |û(n)| with |·| the Euclidean norm of each k-vector.
double wiener_norm(const CircleFunction& f);

struct SobolevEntry {
  double s = 0.0;
  SobolevNorm norm;
};

struct NormReport {
  double energy_spectral = 0.0;
  double energy_gagliardo = 0.0;
  int quadrature_points = 0;
  std::vector<SobolevEntry> sobolev;
  double wiener = 0.0;
};

/// Default quadrature is M = 8(2N+1).
NormReport norm_report(const CircleFunction& f, const std::vector<double>& sobolev_orders, int quadrature_points = 0);

}  // namespace halfhopf
