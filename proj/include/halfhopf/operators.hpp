#pragma once

#include <functional>
#include <vector>

#include "halfhopf/circle_function.hpp"

namespace halfhopf {

/// Point re^{iθ} of the closed unit disc.
struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;

  Complex z() const { return std::polar(r, theta); }
};

/// Applies û(n) ↦ symbol(n)·û(n). The result keeps the real flag only when
/// the caller says the symbol preserves reality.
CircleFunction apply_multiplier(const CircleFunction& f, const std::function<Complex(int)>& symbol,
                                bool preserves_real);

/// (−Δ)^s with symbol |n|^{2s}, s ∈ (0, 1].
CircleFunction fractional_laplacian(const CircleFunction& f, double s);

/// Symbol −i·sgn(n).
CircleFunction hilbert_transform(const CircleFunction& f);

/// Symbol in.
CircleFunction derivative(const CircleFunction& f);

enum class FrequencyPart { positive, nonpositive };

/// Keeps n > 0 (positive) or n ≤ 0 (nonpositive); the two parts sum to f.
CircleFunction freq_projection(const CircleFunction& f, FrequencyPart part);

/// ũ(r,θ) = Σ r^{|n|} e^{inθ} û(n).
std::vector<Complex> harmonic_extension_eval(const CircleFunction& f, DiskPoint p);

/// ∂_z ũ(z) = Σ_{n≥1} n z^{n−1} û(n); antiholomorphic modes drop out.
std::vector<Complex> dz_extension_eval(const CircleFunction& f, Complex z);

/// Radial derivative of the harmonic extension on the boundary, |n| symbol.
CircleFunction radial_derivative_boundary(const CircleFunction& f);

}  // namespace halfhopf
