#include "halfhopf/operators.hpp"

#include <cmath>
#include <cstdlib>

#include "halfhopf/errors.hpp"

namespace halfhopf {

namespace {

// |n|^{2s}, exact for the half-integer powers that show up everywhere.
double abs_power(int n, double s) {
  const double m = std::abs(n);
  if (n == 0) return 0.0;
  if (s == 0.5) return m;
  if (s == 1.0) return m * m;
  if (s == 0.25) return std::sqrt(m);
  return std::pow(m, 2.0 * s);
}

Complex times_minus_i(Complex c) { return {c.imag(), -c.real()}; }
Complex times_i(Complex c) { return {-c.imag(), c.real()}; }

}  // namespace

CircleFunction apply_multiplier(const CircleFunction& f, const std::function<Complex(int)>& symbol,
                                bool preserves_real) {
  CircleFunction out = preserves_real ? f : f.as_complex();
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    const Complex w = symbol(n);
    for (int c = 0; c < f.dim(); ++c) out.coeff_ref(n, c) = w * f.coeff(n, c);
  }
  out.enforce_real_symmetry();
  return out;
}

CircleFunction fractional_laplacian(const CircleFunction& f, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw InputError("fractional_laplacian: s must lie in (0, 1]");
  CircleFunction out = f;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    const double w = abs_power(n, s);
    for (int c = 0; c < f.dim(); ++c) out.coeff_ref(n, c) = w * f.coeff(n, c);
  }
  return out;
}

CircleFunction hilbert_transform(const CircleFunction& f) {
  CircleFunction out = f;
  for (int c = 0; c < f.dim(); ++c) {
    out.coeff_ref(0, c) = {};
    for (int n = 1; n <= f.bandwidth(); ++n) {
      out.coeff_ref(n, c) = times_minus_i(f.coeff(n, c));
      out.coeff_ref(-n, c) = times_i(f.coeff(-n, c));
    }
  }
  return out;
}

CircleFunction derivative(const CircleFunction& f) {
  CircleFunction out = f;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    for (int c = 0; c < f.dim(); ++c) out.coeff_ref(n, c) = static_cast<double>(n) * times_i(f.coeff(n, c));
  }
  return out;
}

CircleFunction freq_projection(const CircleFunction& f, FrequencyPart part) {
  CircleFunction out = f.as_complex();
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    const bool keep = part == FrequencyPart::positive ? n > 0 : n <= 0;
    if (keep) continue;
    for (int c = 0; c < f.dim(); ++c) out.coeff_ref(n, c) = {};
  }
  return out;
}

std::vector<Complex> harmonic_extension_eval(const CircleFunction& f, DiskPoint p) {
  if (!(p.r >= 0.0 && p.r <= 1.0)) throw InputError("harmonic_extension_eval: r must lie in [0, 1]");
  std::vector<Complex> out(static_cast<std::size_t>(f.dim()));
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    const Complex w = std::polar(std::pow(p.r, std::abs(n)), n * p.theta);
    for (int c = 0; c < f.dim(); ++c) out[static_cast<std::size_t>(c)] += w * f.coeff(n, c);
  }
  return out;
}

std::vector<Complex> dz_extension_eval(const CircleFunction& f, Complex z) {
  if (std::abs(z) > 1.0) throw InputError("dz_extension_eval: |z| must not exceed 1");
  std::vector<Complex> out(static_cast<std::size_t>(f.dim()));
  // Horner in z over n = N..1 of n·û(n)
  for (int n = f.bandwidth(); n >= 1; --n) {
    for (int c = 0; c < f.dim(); ++c) {
      auto& acc = out[static_cast<std::size_t>(c)];
      acc = acc * z + static_cast<double>(n) * f.coeff(n, c);
    }
  }
  return out;
}

CircleFunction radial_derivative_boundary(const CircleFunction& f) {
  CircleFunction out = f;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    const double w = std::abs(n);
    for (int c = 0; c < f.dim(); ++c) out.coeff_ref(n, c) = w * f.coeff(n, c);
  }
  return out;
}

}  // namespace halfhopf
