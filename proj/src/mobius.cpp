#include "halfhopf/mobius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "halfhopf/errors.hpp"
#include "halfhopf/operators.hpp"

namespace halfhopf {

namespace {

int output_bandwidth(const CircleFunction& f, const CompositionConfig& cfg) {
  if (cfg.oversample < 4) throw InputError("compose: oversample must be at least 4");
  if (cfg.bandwidth_out < 0) throw InputError("compose: output bandwidth must be non-negative");
  return cfg.bandwidth_out > 0 ? cfg.bandwidth_out : std::max(1, 8 * f.bandwidth());
}

SampleFit checked_fit(const CircleFunction& f, const std::vector<double>& angles, int n_out, double limit) {
  SampleFit fit = resample_at(f, angles, n_out);
  if (fit.tail_fraction > limit) {
    throw ResolutionError("compose: tail fraction " + sci(fit.tail_fraction) + " above " +
                          sci(limit) + " at output bandwidth " + std::to_string(n_out));
  }
  return fit;
}

std::vector<double> trace_angles(const MobiusMap& m, std::size_t count) {
  std::vector<double> angles(count);
  for (std::size_t j = 0; j < count; ++j) angles[j] = boundary_trace(m, grid_angle(j, count));
  return angles;
}

}  // namespace

MobiusMap::MobiusMap(Complex a, Complex mu) : a_(a), mu_(mu) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !(std::abs(a) < 1.0 - 1e-12)) {
    throw InputError("MobiusMap: |a| must be below 1");
  }
  if (!(std::abs(std::abs(mu) - 1.0) <= 1e-12)) throw InputError("MobiusMap: |mu| must equal 1");
}

Complex MobiusMap::operator()(Complex z) const { return mu_ * (z - a_) / (std::conj(a_) * z - 1.0); }

MobiusMap MobiusMap::inverse() const { return {mu_ * a_, std::conj(mu_)}; }

MobiusMap compose_maps(const MobiusMap& outer, const MobiusMap& inner) {
  // matrix of m_{a,μ} is [[μ, −μa], [ā, −1]]
  const auto matrix = [](const MobiusMap& m) {
    return std::array<Complex, 4>{m.mu(), -m.mu() * m.a(), std::conj(m.a()), Complex{-1.0, 0.0}};
  };
  const auto x = matrix(outer);
  const auto y = matrix(inner);
  const Complex p = x[0] * y[0] + x[1] * y[2];
  const Complex q = x[0] * y[1] + x[1] * y[3];
  const Complex s = x[2] * y[1] + x[3] * y[3];
  Complex mu = -p / s;
  mu /= std::abs(mu);
  return {-q / p, mu};
}

double boundary_trace(const MobiusMap& m, double theta) {
  const Complex w = 1.0 - m.a() * std::polar(1.0, -theta);
  return std::arg(m.mu()) + kPi + theta + 2.0 * std::atan2(w.imag(), w.real());
}

double trace_jacobian(const MobiusMap& m, double theta) {
  const double a2 = std::norm(m.a());
  return (1.0 - a2) / std::norm(std::conj(m.a()) * std::polar(1.0, theta) - 1.0);
}

SampleFit compose(const CircleFunction& f, const MobiusMap& m, const CompositionConfig& cfg) {
  const int n_out = output_bandwidth(f, cfg);
  const auto count = static_cast<std::size_t>(cfg.oversample) * static_cast<std::size_t>(2 * n_out + 1);
  return checked_fit(f, trace_angles(m, count), n_out, cfg.max_tail_fraction);
}

double naturality_defect(const CircleFunction& f, const MobiusMap& m, const CompositionConfig& cfg) {
  const int n_out = output_bandwidth(f, cfg);
  const auto count = static_cast<std::size_t>(cfg.oversample) * static_cast<std::size_t>(2 * n_out + 1);
  const auto angles = trace_angles(m, count);
  const CircleFunction lhs = fractional_laplacian(checked_fit(f, angles, n_out, cfg.max_tail_fraction).function, 0.5);

  const CircleFunction half = fractional_laplacian(f, 0.5);
  Samples rhs;
  rhs.dim = f.dim();
  rhs.real = f.is_real();
  rhs.values.reserve(count * static_cast<std::size_t>(f.dim()));
  for (std::size_t j = 0; j < count; ++j) {
    const double jac = trace_jacobian(m, grid_angle(j, count));
    for (const auto& v : half.value_at(angles[j])) rhs.values.push_back(jac * v);
  }
  const SampleFit fit = fit_samples(rhs, n_out);
  if (fit.tail_fraction > cfg.max_tail_fraction) {
    throw ResolutionError("naturality_defect: transported side has tail fraction " +
                          sci(fit.tail_fraction));
  }
  return l2_norm(lhs - fit.function);
}

CircleFunction dilation_field(double delta) {
  CircleFunction x(1, 1, true);
  x.coeff_ref(1) = Complex{0.0, 1.0} * std::polar(1.0, -delta);
  x.coeff_ref(-1) = Complex{0.0, -1.0} * std::polar(1.0, delta);
  return x;
}

}  // namespace halfhopf
