#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace halfhopf {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Truncated Fourier series of a map S¹ → ℂ^dim.
///
/// Coefficients use û(n) = (1/2π)∫₀^{2π} u(θ)e^{−inθ}dθ and are stored
/// two-sided for n ∈ [−N, N], so Parseval reads ∫|u|² = 2π Σ|û(n)|².
/// Anything outside [−N, N] is zero by construction.
///
/// A real function keeps both halves of the spectrum; the invariant
/// û(−n) = conj(û(n)) holds bit-for-bit because every producer of a real
/// function either computes one half and mirrors it, or applies a symbol
/// that commutes exactly with conjugation.
class CircleFunction {
 public:
  CircleFunction() : CircleFunction(0, 1, true) {}
  CircleFunction(int bandwidth, int dim, bool real);

  int bandwidth() const noexcept { return bandwidth_; }
  int dim() const noexcept { return dim_; }
  bool is_real() const noexcept { return real_; }

  /// û(n) component c; zero outside the band.
  Complex coeff(int n, int c = 0) const noexcept {
    if (n < -bandwidth_ || n > bandwidth_) return {};
    return coeffs_[index(n, c)];
  }
  /// Mutable access for builders; |n| must not exceed the bandwidth.
  Complex& coeff_ref(int n, int c = 0);

  /// The k-vector û(n), |n| ≤ N.
  std::span<const Complex> mode(int n) const;
  std::span<const Complex> data() const noexcept { return coeffs_; }

  std::vector<Complex> value_at(double theta) const;

  /// Truncates or zero-pads to a new bandwidth.
  CircleFunction resized(int bandwidth) const;
  CircleFunction component(int c) const;
  /// Same coefficients with the real flag dropped.
  CircleFunction as_complex() const;

  /// Mirrors the n > 0 half onto n < 0 and zeroes Im û(0). No-op for
  /// complex functions.
  void enforce_real_symmetry();
  /// max_{n,c} |û(−n) − conj û(n)|.
  double hermitian_defect() const;

  CircleFunction& operator+=(const CircleFunction& other);
  CircleFunction& operator-=(const CircleFunction& other);
  CircleFunction& operator*=(double scale);

  friend CircleFunction operator+(CircleFunction a, const CircleFunction& b) { return a += b; }
  friend CircleFunction operator-(CircleFunction a, const CircleFunction& b) { return a -= b; }
  friend CircleFunction operator*(CircleFunction a, double s) { return a *= s; }
  friend CircleFunction operator*(double s, CircleFunction a) { return a *= s; }
  /// Complex scaling; the result is complex unless the factor is real.
  friend CircleFunction operator*(Complex s, const CircleFunction& a);

 private:
  std::size_t index(int n, int c) const noexcept {
    return static_cast<std::size_t>(n + bandwidth_) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(c);
  }

  int bandwidth_;
  int dim_;
  bool real_;
  std::vector<Complex> coeffs_;
};

/// One Fourier mode for builder helpers: frequency plus its k-vector.
struct Mode {
  int n;
  std::vector<Complex> value;
};

/// Builds a function from explicitly listed modes (all other coefficients
/// zero). For real = true the list must already be conjugate-symmetric.
CircleFunction from_modes(int dim, bool real, const std::vector<Mode>& modes);
CircleFunction constant_function(const std::vector<Complex>& value, bool real);

/// Stacks scalar functions into one vector-valued function.
CircleFunction stack(const std::vector<CircleFunction>& components);

/// Samples on the uniform grid θ_j = 2πj/M, stored sample-major.
struct Samples {
  int dim = 1;
  bool real = true;
  std::vector<Complex> values;

  std::size_t count() const noexcept { return dim > 0 ? values.size() / static_cast<std::size_t>(dim) : 0; }
  std::span<const Complex> at(std::size_t j) const {
    return {values.data() + j * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  std::span<Complex> at(std::size_t j) {
    return {values.data() + j * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

inline double grid_angle(std::size_t j, std::size_t m) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(m);
}

/// Result of projecting samples onto bandwidth N. tail_fraction is the
/// share of the discrete L² mass that fell outside [−N, N].
struct SampleFit {
  CircleFunction function;
  double tail_fraction = 0.0;
};

/// Discrete Fourier coefficients truncated to bandwidth N, with the
/// discarded mass reported rather than checked. Requires M ≥ 2N+1.
SampleFit fit_samples(const Samples& samples, int bandwidth);

/// Strict variant: additionally rejects inputs whose mass above the band
/// exceeds max_tail_fraction (the trigonometric polynomial would alias).
CircleFunction from_samples(const Samples& samples, int bandwidth, double max_tail_fraction = 1e-10);

/// Fits θ_j ↦ f(angles[j]) for the M = angles.size() grid angles θ_j; the
/// tail fraction measures how far f∘φ is from bandwidth N.
SampleFit resample_at(const CircleFunction& f, std::span<const double> angles, int bandwidth);

/// Evaluates the series at M ≥ 1 uniform angles.
Samples to_samples(const CircleFunction& f, std::size_t m);

/// Full M-point discrete spectrum, frequencies ordered −⌊(M−1)/2⌋ …;
/// used only where the whole tail must be inspected.
std::vector<std::vector<Complex>> full_spectrum(const Samples& samples);

/// Exact coefficient convolution of f·g with the non-Hermitian dot product
/// on ℂ^k. Bandwidth N_f + N_g, scalar result.
CircleFunction pointwise_dot(const CircleFunction& f, const CircleFunction& g);

/// Scalar function times vector function, by exact convolution.
CircleFunction multiply(const CircleFunction& scalar, const CircleFunction& f);

/// ∫₀^{2π} f (componentwise) = 2π f̂(0).
std::vector<Complex> integrate(const CircleFunction& f);
/// ∫ f g for scalar f, g: 2π Σ f̂(n)ĝ(−n).
Complex integrate_product(const CircleFunction& f, const CircleFunction& g);
/// (∫|u|²)^{1/2} from the coefficients.
double l2_norm(const CircleFunction& f);
/// max over n, c of |û(n) − v̂(n)|, bandwidths may differ.
double max_coeff_difference(const CircleFunction& f, const CircleFunction& g);

/// θ ↦ u(θ + α).
CircleFunction rotate(const CircleFunction& f, double alpha);

}  // namespace halfhopf
