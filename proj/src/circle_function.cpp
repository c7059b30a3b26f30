#include "halfhopf/circle_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "halfhopf/errors.hpp"

namespace halfhopf {

namespace {

// e^{2πiq/M} for q = 0..M-1.
std::vector<Complex> twiddles(std::size_t m) {
  std::vector<Complex> table(m);
  for (std::size_t q = 0; q < m; ++q) {
    table[q] = std::polar(1.0, grid_angle(q, m));
  }
  return table;
}

std::size_t wrap(std::int64_t value, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = value % mm;
  return static_cast<std::size_t>(r < 0 ? r + mm : r);
}

// Discrete coefficient at frequency n: (1/M) Σ_j u_j e^{-inθ_j}.
void dft_mode(const Samples& s, const std::vector<Complex>& tw, int n, std::span<Complex> out) {
  const std::size_t m = s.count();
  std::fill(out.begin(), out.end(), Complex{});
  // step through e^{-inθ_j} by index arithmetic to stay exact in the phase
  const std::size_t stride = wrap(-static_cast<std::int64_t>(n), m);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex w = tw[idx];
    const auto u = s.at(j);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += u[c] * w;
    idx += stride;
    if (idx >= m) idx -= m;
  }
  const double inv = 1.0 / static_cast<double>(m);
  for (auto& v : out) v *= inv;
}

void require_same_dim(const CircleFunction& f, const CircleFunction& g, const char* op) {
  if (f.dim() != g.dim()) {
    throw InputError(std::string(op) + ": dimension mismatch (" + std::to_string(f.dim()) + " vs " +
                     std::to_string(g.dim()) + ")");
  }
}

}  // namespace

CircleFunction::CircleFunction(int bandwidth, int dim, bool real)
    : bandwidth_(bandwidth), dim_(dim), real_(real) {
  if (bandwidth < 0) throw InputError("bandwidth must be non-negative");
  if (dim < 1) throw InputError("dimension must be at least 1");
  coeffs_.assign(static_cast<std::size_t>(2 * bandwidth + 1) * static_cast<std::size_t>(dim), Complex{});
}

Complex& CircleFunction::coeff_ref(int n, int c) {
  if (n < -bandwidth_ || n > bandwidth_ || c < 0 || c >= dim_) {
    throw InputError("coefficient index (" + std::to_string(n) + ", " + std::to_string(c) +
                     ") outside bandwidth " + std::to_string(bandwidth_));
  }
  return coeffs_[index(n, c)];
}

std::span<const Complex> CircleFunction::mode(int n) const {
  if (n < -bandwidth_ || n > bandwidth_) throw InputError("mode outside bandwidth");
  return {coeffs_.data() + index(n, 0), static_cast<std::size_t>(dim_)};
}

std::vector<Complex> CircleFunction::value_at(double theta) const {
  std::vector<Complex> out(static_cast<std::size_t>(dim_));
  for (int n = -bandwidth_; n <= bandwidth_; ++n) {
    const Complex e = std::polar(1.0, n * theta);
    for (int c = 0; c < dim_; ++c) out[static_cast<std::size_t>(c)] += coeffs_[index(n, c)] * e;
  }
  if (real_) {
    for (auto& v : out) v = {v.real(), 0.0};
  }
  return out;
}

CircleFunction CircleFunction::resized(int bandwidth) const {
  CircleFunction out(bandwidth, dim_, real_);
  const int keep = std::min(bandwidth, bandwidth_);
  for (int n = -keep; n <= keep; ++n) {
    for (int c = 0; c < dim_; ++c) out.coeffs_[out.index(n, c)] = coeffs_[index(n, c)];
  }
  return out;
}

CircleFunction CircleFunction::component(int c) const {
  if (c < 0 || c >= dim_) throw InputError("component index out of range");
  CircleFunction out(bandwidth_, 1, real_);
  for (int n = -bandwidth_; n <= bandwidth_; ++n) out.coeffs_[out.index(n, 0)] = coeffs_[index(n, c)];
  return out;
}

CircleFunction CircleFunction::as_complex() const {
  CircleFunction out = *this;
  out.real_ = false;
  return out;
}

void CircleFunction::enforce_real_symmetry() {
  if (!real_) return;
  for (int c = 0; c < dim_; ++c) {
    auto& zero = coeffs_[index(0, c)];
    zero = {zero.real(), 0.0};
    for (int n = 1; n <= bandwidth_; ++n) coeffs_[index(-n, c)] = std::conj(coeffs_[index(n, c)]);
  }
}

double CircleFunction::hermitian_defect() const {
  double worst = 0.0;
  for (int n = 0; n <= bandwidth_; ++n) {
    for (int c = 0; c < dim_; ++c) {
      worst = std::max(worst, std::abs(coeffs_[index(-n, c)] - std::conj(coeffs_[index(n, c)])));
    }
  }
  return worst;
}

CircleFunction& CircleFunction::operator+=(const CircleFunction& other) {
  require_same_dim(*this, other, "operator+");
  if (other.bandwidth_ > bandwidth_) *this = resized(other.bandwidth_);
  real_ = real_ && other.real_;
  for (int n = -other.bandwidth_; n <= other.bandwidth_; ++n) {
    for (int c = 0; c < dim_; ++c) coeffs_[index(n, c)] += other.coeffs_[other.index(n, c)];
  }
  return *this;
}

CircleFunction& CircleFunction::operator-=(const CircleFunction& other) {
  require_same_dim(*this, other, "operator-");
  if (other.bandwidth_ > bandwidth_) *this = resized(other.bandwidth_);
  real_ = real_ && other.real_;
  for (int n = -other.bandwidth_; n <= other.bandwidth_; ++n) {
    for (int c = 0; c < dim_; ++c) coeffs_[index(n, c)] -= other.coeffs_[other.index(n, c)];
  }
  return *this;
}

CircleFunction& CircleFunction::operator*=(double scale) {
  for (auto& v : coeffs_) v *= scale;
  return *this;
}

CircleFunction operator*(Complex s, const CircleFunction& a) {
  CircleFunction out = s.imag() == 0.0 ? a : a.as_complex();
  for (int n = -a.bandwidth(); n <= a.bandwidth(); ++n) {
    for (int c = 0; c < a.dim(); ++c) out.coeff_ref(n, c) = s * a.coeff(n, c);
  }
  return out;
}

CircleFunction from_modes(int dim, bool real, const std::vector<Mode>& modes) {
  int bandwidth = 0;
  for (const auto& m : modes) bandwidth = std::max(bandwidth, std::abs(m.n));
  CircleFunction out(bandwidth, dim, real);
  for (const auto& m : modes) {
    if (static_cast<int>(m.value.size()) != dim) throw InputError("mode has wrong dimension");
    for (int c = 0; c < dim; ++c) out.coeff_ref(m.n, c) += m.value[static_cast<std::size_t>(c)];
  }
  if (real && out.hermitian_defect() != 0.0) {
    throw InputError("modes flagged real are not conjugate-symmetric");
  }
  return out;
}

CircleFunction constant_function(const std::vector<Complex>& value, bool real) {
  return from_modes(static_cast<int>(value.size()), real, {{0, value}});
}

CircleFunction stack(const std::vector<CircleFunction>& components) {
  if (components.empty()) throw InputError("stack: no components");
  int bandwidth = 0;
  bool real = true;
  for (const auto& f : components) {
    if (f.dim() != 1) throw InputError("stack: components must be scalar");
    bandwidth = std::max(bandwidth, f.bandwidth());
    real = real && f.is_real();
  }
  CircleFunction out(bandwidth, static_cast<int>(components.size()), real);
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& f = components[c];
    for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) out.coeff_ref(n, static_cast<int>(c)) = f.coeff(n);
  }
  return out;
}

SampleFit fit_samples(const Samples& samples, int bandwidth) {
  const std::size_t m = samples.count();
  if (samples.dim < 1 || samples.values.size() != m * static_cast<std::size_t>(samples.dim)) {
    throw InputError("samples: value count is not a multiple of the dimension");
  }
  if (bandwidth < 0) throw InputError("bandwidth must be non-negative");
  if (m < static_cast<std::size_t>(2 * bandwidth + 1)) {
    throw InputError("from_samples: " + std::to_string(m) + " samples cannot resolve bandwidth " +
                     std::to_string(bandwidth) + " (need M >= 2N+1)");
  }
  const auto tw = twiddles(m);
  CircleFunction out(bandwidth, samples.dim, samples.real);
  std::vector<Complex> buf(static_cast<std::size_t>(samples.dim));
  const int lowest = samples.real ? 0 : -bandwidth;
  for (int n = lowest; n <= bandwidth; ++n) {
    dft_mode(samples, tw, n, buf);
    for (int c = 0; c < samples.dim; ++c) out.coeff_ref(n, c) = buf[static_cast<std::size_t>(c)];
  }
  out.enforce_real_symmetry();

  // discrete Parseval: (1/M)Σ|u_j|² is the mass of all M bins
  double total = 0.0;
  for (const auto& v : samples.values) total += std::norm(v);
  total /= static_cast<double>(m);
  double kept = 0.0;
  for (const auto& v : out.data()) kept += std::norm(v);
  const double tail = std::max(0.0, total - kept);
  return {std::move(out), total > 0.0 ? tail / total : 0.0};
}

CircleFunction from_samples(const Samples& samples, int bandwidth, double max_tail_fraction) {
  auto fit = fit_samples(samples, bandwidth);
  if (fit.tail_fraction > max_tail_fraction) {
    throw ResolutionError("from_samples: " + sci(fit.tail_fraction) +
                          " of the sampled mass lies above bandwidth " + std::to_string(bandwidth) +
                          " (aliasing)");
  }
  return std::move(fit.function);
}

SampleFit resample_at(const CircleFunction& f, std::span<const double> angles, int bandwidth) {
  Samples samples;
  samples.dim = f.dim();
  samples.real = f.is_real();
  samples.values.reserve(angles.size() * static_cast<std::size_t>(f.dim()));
  for (const double a : angles) {
    const auto v = f.value_at(a);
    samples.values.insert(samples.values.end(), v.begin(), v.end());
  }
  return fit_samples(samples, bandwidth);
}

Samples to_samples(const CircleFunction& f, std::size_t m) {
  if (m < 1) throw InputError("to_samples: need at least one sample");
  Samples out;
  out.dim = f.dim();
  out.real = f.is_real();
  out.values.assign(m * static_cast<std::size_t>(f.dim()), Complex{});
  const auto tw = twiddles(m);
  const int big_n = f.bandwidth();
  for (std::size_t j = 0; j < m; ++j) {
    auto u = out.at(j);
    std::size_t idx = wrap(-static_cast<std::int64_t>(big_n) * static_cast<std::int64_t>(j), m);
    const std::size_t stride = j % m;
    for (int n = -big_n; n <= big_n; ++n) {
      const Complex w = tw[idx];
      const auto mode = f.mode(n);
      for (int c = 0; c < f.dim(); ++c) u[static_cast<std::size_t>(c)] += mode[static_cast<std::size_t>(c)] * w;
      idx += stride;
      if (idx >= m) idx -= m;
    }
    if (f.is_real()) {
      for (auto& v : u) v = {v.real(), 0.0};
    }
  }
  return out;
}

std::vector<std::vector<Complex>> full_spectrum(const Samples& samples) {
  const std::size_t m = samples.count();
  const auto tw = twiddles(m);
  const int lo = -static_cast<int>((m - 1) / 2);
  std::vector<std::vector<Complex>> out;
  out.reserve(m);
  for (std::size_t q = 0; q < m; ++q) {
    std::vector<Complex> buf(static_cast<std::size_t>(samples.dim));
    dft_mode(samples, tw, lo + static_cast<int>(q), buf);
    out.push_back(std::move(buf));
  }
  return out;
}

CircleFunction pointwise_dot(const CircleFunction& f, const CircleFunction& g) {
  require_same_dim(f, g, "pointwise_dot");
  const int nf = f.bandwidth();
  const int ng = g.bandwidth();
  CircleFunction out(nf + ng, 1, f.is_real() && g.is_real());
  for (int a = -nf; a <= nf; ++a) {
    const auto fa = f.mode(a);
    for (int b = -ng; b <= ng; ++b) {
      const auto gb = g.mode(b);
      Complex acc{};
      for (int c = 0; c < f.dim(); ++c) acc += fa[static_cast<std::size_t>(c)] * gb[static_cast<std::size_t>(c)];
      out.coeff_ref(a + b) += acc;
    }
  }
  out.enforce_real_symmetry();
  return out;
}

CircleFunction multiply(const CircleFunction& scalar, const CircleFunction& f) {
  if (scalar.dim() != 1) throw InputError("multiply: first factor must be scalar");
  const int ns = scalar.bandwidth();
  const int nf = f.bandwidth();
  CircleFunction out(ns + nf, f.dim(), scalar.is_real() && f.is_real());
  for (int a = -ns; a <= ns; ++a) {
    const Complex s = scalar.coeff(a);
    if (s == Complex{}) continue;
    for (int b = -nf; b <= nf; ++b) {
      const auto fb = f.mode(b);
      for (int c = 0; c < f.dim(); ++c) out.coeff_ref(a + b, c) += s * fb[static_cast<std::size_t>(c)];
    }
  }
  out.enforce_real_symmetry();
  return out;
}

std::vector<Complex> integrate(const CircleFunction& f) {
  std::vector<Complex> out(static_cast<std::size_t>(f.dim()));
  for (int c = 0; c < f.dim(); ++c) out[static_cast<std::size_t>(c)] = kTwoPi * f.coeff(0, c);
  return out;
}

Complex integrate_product(const CircleFunction& f, const CircleFunction& g) {
  if (f.dim() != 1 || g.dim() != 1) throw InputError("integrate_product: scalar functions only");
  const int big_n = std::min(f.bandwidth(), g.bandwidth());
  Complex acc{};
  for (int n = -big_n; n <= big_n; ++n) acc += f.coeff(n) * g.coeff(-n);
  return kTwoPi * acc;
}

double l2_norm(const CircleFunction& f) {
  double sum = 0.0;
  for (const auto& v : f.data()) sum += std::norm(v);
  return std::sqrt(kTwoPi * sum);
}

double max_coeff_difference(const CircleFunction& f, const CircleFunction& g) {
  require_same_dim(f, g, "max_coeff_difference");
  const int big_n = std::max(f.bandwidth(), g.bandwidth());
  double worst = 0.0;
  for (int n = -big_n; n <= big_n; ++n) {
    for (int c = 0; c < f.dim(); ++c) worst = std::max(worst, std::abs(f.coeff(n, c) - g.coeff(n, c)));
  }
  return worst;
}

CircleFunction rotate(const CircleFunction& f, double alpha) {
  CircleFunction out = f;
  for (int n = 0; n <= f.bandwidth(); ++n) {
    const Complex phase = std::polar(1.0, n * alpha);
    for (int c = 0; c < f.dim(); ++c) {
      out.coeff_ref(n, c) = f.coeff(n, c) * phase;
      out.coeff_ref(-n, c) = f.coeff(-n, c) * std::conj(phase);
    }
  }
  out.enforce_real_symmetry();
  return out;
}

}  // namespace halfhopf
