#include "halfhopf/variation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "halfhopf/commutator.hpp"
#include "halfhopf/energy.hpp"
#include "halfhopf/errors.hpp"
#include "halfhopf/hopf.hpp"
#include "halfhopf/mobius.hpp"
#include "halfhopf/operators.hpp"

namespace halfhopf {

namespace {

void require_real_scalar_field(const CircleFunction& field, const char* what) {
  if (field.dim() != 1) throw InputError(std::string(what) + ": the vector field must be scalar");
  if (!field.is_real()) throw InputError(std::string(what) + ": the vector field must be real");
}

void require_real(const CircleFunction& f, const char* what) {
  if (!f.is_real()) throw InputError(std::string(what) + ": real-valued input expected");
}

// ĝ(k) for g = u′·(−Δ)^{1/2}u.
Complex derivative_dot_half_laplacian(const CircleFunction& f, int k) {
  const int big_n = f.bandwidth();
  Complex acc{};
  for (int m = std::max(-big_n, k - big_n); m <= std::min(big_n, k + big_n); ++m) {
    const auto um = f.mode(m);
    const auto ur = f.mode(k - m);
    Complex dot{};
    for (int c = 0; c < f.dim(); ++c) dot += um[static_cast<std::size_t>(c)] * ur[static_cast<std::size_t>(c)];
    acc += Complex{0.0, static_cast<double>(m)} * static_cast<double>(std::abs(k - m)) * dot;
  }
  return acc;
}

// d/dx((−Δ)^{1/2}u·u X) − D_{1/2}(u′X, u)
CircleFunction conservation_density(const CircleFunction& f, const CircleFunction& field) {
  const CircleFunction half = fractional_laplacian(f, 0.5);
  const CircleFunction flux = derivative(multiply(field, pointwise_dot(half, f)));
  const CircleFunction transported = multiply(field, derivative(f));
  return flux - d_s(transported, f, 0.5);
}

std::string describe_dilation(double delta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "2sin(%.6g-x)", delta);
  return buf;
}

}  // namespace

CircleFunction inner_variation(const CircleFunction& f) {
  return pointwise_dot(fractional_laplacian(f, 0.5), derivative(f));
}

double pair_with_field(const CircleFunction& v, const CircleFunction& field) {
  if (v.dim() != 1 || field.dim() != 1) {
    throw InputError("pair_with_field: dimension mismatch (expected scalar functions, got dim " +
                     std::to_string(v.dim()) + " and " + std::to_string(field.dim()) + ")");
  }
  return integrate_product(v, field).real();
}

double integrate_field_flow(const CircleFunction& field, double theta, double t, int steps) {
  if (steps < 1) throw InputError("integrate_field_flow: need at least one step");
  const auto x = [&field](double th) { return field.value_at(th)[0].real(); };
  const double dt = t / steps;
  double y = theta;
  for (int i = 0; i < steps; ++i) {
    const double k1 = x(y);
    const double k2 = x(y + 0.5 * dt * k1);
    const double k3 = x(y + 0.5 * dt * k2);
    const double k4 = x(y + dt * k3);
    y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

double directional_energy_derivative(const CircleFunction& f, const CircleFunction& field, double h,
                                     const FlowResampling& cfg) {
  require_real_scalar_field(field, "directional_energy_derivative");
  if (!(h > 0.0)) throw InputError("directional_energy_derivative: h must be positive");
  if (cfg.oversample < 1 || cfg.out_factor < 1 || cfg.substeps < 1) {
    throw InputError("directional_energy_derivative: resampling factors must be positive");
  }
  const int n_out = std::max(1, cfg.out_factor * f.bandwidth());
  const auto m = static_cast<std::size_t>(cfg.oversample) * static_cast<std::size_t>(2 * n_out + 1);
  std::vector<double> angles(m);
  double energy[2] = {0.0, 0.0};
  for (int side = 0; side < 2; ++side) {
    const double t = side == 0 ? h : -h;
    for (std::size_t j = 0; j < m; ++j) angles[j] = integrate_field_flow(field, grid_angle(j, m), t, cfg.substeps);
    const SampleFit fit = resample_at(f, angles, n_out);
    if (fit.tail_fraction > cfg.max_tail_fraction) {
      throw ResolutionError("directional_energy_derivative: flow step too large, resampled tail " +
                            sci(fit.tail_fraction) + " exceeds " + sci(cfg.max_tail_fraction));
    }
    energy[side] = energy_spectral(fit.function);
  }
  return (energy[0] - energy[1]) / (2.0 * h);
}

BalancingDefect balancing_defect(const CircleFunction& f) {
  require_real(f, "balancing_defect");
  double cc = 0.0;
  double ss = 0.0;
  double cs = 0.0;
  for (int c = 0; c < f.dim(); ++c) {
    const Complex plus = f.coeff(1, c);
    const Complex minus = f.coeff(-1, c);
    const double ic = (kPi * (plus + minus)).real();
    const double is = (Complex{0.0, kPi} * (plus - minus)).real();
    cc += ic * ic;
    ss += is * is;
    cs += ic * is;
  }
  return {std::abs(cc - ss), std::abs(cs)};
}

double pohozaev_residual(const CircleFunction& f, double delta) {
  require_real(f, "pohozaev_residual");
  // sin(δ−x) has X̂(−1) = e^{iδ}/(2i), X̂(1) = −e^{−iδ}/(2i)
  const Complex two_i{0.0, 2.0};
  const Complex x_minus = std::polar(1.0, delta) / two_i;
  const Complex x_plus = -std::polar(1.0, -delta) / two_i;
  const Complex value = kTwoPi * (derivative_dot_half_laplacian(f, 1) * x_minus +
                                  derivative_dot_half_laplacian(f, -1) * x_plus);
  return value.real();
}

double rotation_pohozaev(const CircleFunction& f) {
  require_real(f, "rotation_pohozaev");
  return (kTwoPi * derivative_dot_half_laplacian(f, 0)).real();
}

CircleFunction noether_residual(const CircleFunction& f, const CircleFunction& field, bool conformal_flag) {
  require_real_scalar_field(field, "noether_residual");
  if (conformal_flag) {
    for (int n = 2; n <= field.bandwidth(); ++n) {
      if (field.coeff(n) != Complex{} || field.coeff(-n) != Complex{}) {
        throw InputError("noether_residual: field flagged conformal has frequency " + std::to_string(n));
      }
    }
  }
  CircleFunction r = conservation_density(f, field);
  r -= 2.0 * multiply(field, inner_variation(f));
  return r;
}

double conservation_residual(const CircleFunction& f, const CircleFunction& field) {
  require_real_scalar_field(field, "conservation_residual");
  return l2_norm(conservation_density(f, field));
}

ContinuityProbe variation_continuity_probe(const CircleFunction& f, const std::vector<int>& truncations,
                                           const std::vector<CircleFunction>& fields) {
  std::vector<CircleFunction> probes = fields;
  if (probes.empty()) {
    const Complex half_i{0.0, 0.5};
    probes.push_back(from_modes(1, true, {{2, {-half_i}}, {-2, {half_i}}}));
    probes.push_back(from_modes(1, true, {{2, {0.5}}, {-2, {0.5}}, {3, {-half_i}}, {-3, {half_i}}}));
  }
  for (const auto& x : probes) require_real_scalar_field(x, "variation_continuity_probe");

  ContinuityProbe out;
  for (std::size_t j = 0; j < truncations.size(); ++j) {
    const int big_n = truncations[j];
    if (big_n < 0 || (j > 0 && big_n <= truncations[j - 1])) {
      throw InputError("variation_continuity_probe: truncations must be non-negative and increasing");
    }
    ContinuityRow row;
    row.truncation = big_n;
    const CircleFunction v = inner_variation(f.resized(std::min(big_n, f.bandwidth())));
    for (const auto& x : probes) row.pairings.push_back(pair_with_field(v, x));
    double tail = 0.0;
    for (int n = big_n + 1; n <= f.bandwidth(); ++n) {
      for (int c = 0; c < f.dim(); ++c) tail += n * (std::norm(f.coeff(n, c)) + std::norm(f.coeff(-n, c)));
    }
    row.tail = std::sqrt(tail);
    if (j > 0) {
      const ContinuityRow& prev = out.rows.back();
      for (std::size_t i = 0; i < probes.size(); ++i) {
        row.step = std::max(row.step, std::abs(row.pairings[i] - prev.pairings[i]));
      }
      if (prev.tail > 0.0) out.fitted_constant = std::max(out.fitted_constant, row.step / prev.tail);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

ResidualReport residual_report(const CircleFunction& f, const std::vector<double>& deltas) {
  require_real(f, "residual_report");
  ResidualReport out;
  const HopfReport hopf = fractional_hopf_coeffs(f);
  out.stationarity = hopf.max_coeff;
  out.stationarity_weighted = hopf.max_weighted;
  out.variation_l2 = l2_norm(inner_variation(f));
  out.balancing = balancing_defect(f);
  for (const double d : deltas) out.pohozaev.push_back({d, pohozaev_residual(f, d)});
  out.rotation_pohozaev = rotation_pohozaev(f);
  out.noether.push_back({"1", conservation_residual(f, constant_function({1.0}, true))});
  for (const double d : deltas) out.noether.push_back({describe_dilation(d), conservation_residual(f, dilation_field(d))});
  return out;
}

}  // namespace halfhopf
