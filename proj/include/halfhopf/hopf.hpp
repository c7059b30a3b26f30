#pragma once

#include <iosfwd>
#include <vector>

#include "halfhopf/circle_function.hpp"
#include "halfhopf/operators.hpp"

namespace halfhopf {

/// Polar sampling grid of the open disc: radii r_max·i/(radial−1) for
/// i = 0..radial−1 (so z = 0 is included) and angles 2πj/angular.
struct DiscGrid {
  int radial = 16;
  int angular = 64;
  double r_max = 0.95;

  std::vector<DiskPoint> points() const;
};

struct DiskSample {
  DiskPoint point;
  Complex value;
};

/// Coefficients c_k = Σ_{m+n=k, m,n≥1} m n û(m)·û(n) of the fractional Hopf
/// differential (c_k is the frequency k−2 coefficient of 𝓗½(u)), plus
/// optional samples of the Hopf differential of the harmonic extension.
struct HopfReport {
  /// c_k for k = 2..2N, stored at index k−2.
  std::vector<Complex> coeffs;
  /// c_k / k², the bandwidth-independent residual.
  std::vector<Complex> weighted;
  std::vector<DiskSample> disc_samples;
  double max_coeff = 0.0;
  double max_weighted = 0.0;
  double max_disc = 0.0;

  /// c_k, zero outside the stored range.
  Complex coeff(int k) const;
};

/// 𝓗(ũ)(z) = ∂_zũ·∂_zũ (non-Hermitian dot), |z| < 1.
Complex hopf_differential_at(const CircleFunction& f, Complex z);

/// Same quantity from the power series Σ_k c_k z^{k−2}.
Complex hopf_series_at(const HopfReport& report, Complex z);

/// c_k by convolution over the positive frequencies; no disc samples.
HopfReport fractional_hopf_coeffs(const CircleFunction& f);

/// Same report with disc samples and max_disc filled in.
HopfReport hopf_report(const CircleFunction& f, const DiscGrid& grid);

/// 𝓗½(u) = (e^{−2iθ}/2i)(𝒱½(u) + iH𝒱½(u)), assembled from the inner
/// variation. Coefficient k−2 equals c_k.
CircleFunction fractional_hopf_from_variation(const CircleFunction& f);

std::vector<DiskSample> sample_hopf(const CircleFunction& f, const DiscGrid& grid);

/// max over the grid of |𝓗(ũ)|.
double conformality_defect(const CircleFunction& f, const DiscGrid& grid);

/// CSV with header r,theta,re,im,abs.
void write_disc_samples_csv(std::ostream& out, const std::vector<DiskSample>& samples);

}  // namespace halfhopf
