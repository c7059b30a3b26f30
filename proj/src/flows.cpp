#include "halfhopf/flows.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "halfhopf/energy.hpp"
#include "halfhopf/errors.hpp"
#include "halfhopf/hopf.hpp"
#include "halfhopf/operators.hpp"

namespace halfhopf {

namespace {

constexpr double kBlaschkeTail = 1e-14;

Complex blaschke_value(const std::vector<Complex>& zeros, Complex mu, Complex z, BlaschkeNormalization norm) {
  Complex value = mu;
  for (const Complex& a : zeros) {
    const Complex den = norm == BlaschkeNormalization::classical ? 1.0 - std::conj(a) * z : std::conj(a) * z - 1.0;
    value *= (z - a) / den;
  }
  return value;
}

std::size_t grid_size(int oversample, int bandwidth) {
  return static_cast<std::size_t>(oversample) * static_cast<std::size_t>(2 * bandwidth + 1);
}

// Tangential part of v at u, pointwise.
void tangential(std::span<const Complex> u, std::span<const Complex> v, std::span<Complex> out) {
  double uv = 0.0;
  double uu = 0.0;
  for (std::size_t c = 0; c < u.size(); ++c) {
    uv += u[c].real() * v[c].real();
    uu += u[c].real() * u[c].real();
  }
  const double k = uu > 0.0 ? uv / uu : 0.0;
  for (std::size_t c = 0; c < u.size(); ++c) out[c] = v[c].real() - k * u[c].real();
}

// u_j ↦ u_j/|u_j| in place.
void normalize_samples(Samples& s, double min_norm) {
  for (std::size_t j = 0; j < s.count(); ++j) {
    auto u = s.at(j);
    double norm = 0.0;
    for (const auto& v : u) norm += std::norm(v);
    norm = std::sqrt(norm);
    if (!(norm >= min_norm)) {
      throw ProjectionError("sphere_project: |u| = " + std::to_string(norm) + " at theta = " +
                            std::to_string(grid_angle(j, s.count())) + " (projection undefined)");
    }
    for (auto& v : u) v /= norm;
  }
}

struct FlowState {
  CircleFunction u;
  double energy = 0.0;
};

}  // namespace

CircleFunction blaschke_series(const std::vector<Complex>& zeros, Complex mu, int bandwidth,
                               BlaschkeNormalization normalization) {
  if (bandwidth < 1) throw InputError("blaschke_series: bandwidth must be at least 1");
  if (!(std::abs(std::abs(mu) - 1.0) <= 1e-12)) throw InputError("blaschke_series: |mu| must equal 1");
  for (const Complex& a : zeros) {
    if (!(std::abs(a) < 1.0)) throw InputError("blaschke_series: every zero must satisfy |a| < 1");
  }
  const std::size_t m = grid_size(4, bandwidth);
  Samples s;
  s.dim = 1;
  s.real = false;
  s.values.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    s.values[j] = blaschke_value(zeros, mu, std::polar(1.0, grid_angle(j, m)), normalization);
  }
  const auto spectrum = full_spectrum(s);
  const int lo = -static_cast<int>((m - 1) / 2);
  CircleFunction out(bandwidth, 1, false);
  double tail = 0.0;
  for (std::size_t q = 0; q < spectrum.size(); ++q) {
    const int n = lo + static_cast<int>(q);
    if (n >= 0 && n <= bandwidth) {
      out.coeff_ref(n) = spectrum[q][0];
    } else {
      tail = std::max(tail, std::abs(spectrum[q][0]));
    }
  }
  if (tail > kBlaschkeTail) {
    throw ResolutionError("blaschke_series: coefficient tail " + sci(tail) + " above bandwidth " +
                          std::to_string(bandwidth) + " exceeds 1e-14");
  }
  return out;
}

CircleFunction realify(const CircleFunction& g) {
  if (g.dim() != 1) throw InputError("realify: scalar function expected");
  CircleFunction out(g.bandwidth(), 2, true);
  for (int n = 1; n <= g.bandwidth(); ++n) {
    // Re g has coefficient (ĝ(n) + conj ĝ(−n))/2, Im g has (ĝ(n) − conj ĝ(−n))/(2i)
    const Complex p = g.coeff(n);
    const Complex q = std::conj(g.coeff(-n));
    out.coeff_ref(n, 0) = 0.5 * (p + q);
    out.coeff_ref(n, 1) = Complex{0.0, -0.5} * (p - q);
  }
  out.coeff_ref(0, 0) = g.coeff(0).real();
  out.coeff_ref(0, 1) = g.coeff(0).imag();
  out.enforce_real_symmetry();
  return out;
}

CircleFunction blaschke_trace(const std::vector<Complex>& zeros, Complex mu, int bandwidth,
                              BlaschkeNormalization normalization) {
  return realify(blaschke_series(zeros, mu, bandwidth, normalization));
}

CircleFunction scaling_family(const CircleFunction& f, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw InputError("scaling_family: r must lie in (0, 1]");
  CircleFunction out = f;
  double w = 1.0;
  for (int n = 0; n <= f.bandwidth(); ++n) {
    for (int c = 0; c < f.dim(); ++c) {
      out.coeff_ref(n, c) = w * f.coeff(n, c);
      out.coeff_ref(-n, c) = w * f.coeff(-n, c);
    }
    w *= r;
  }
  return out;
}

SampleFit sphere_project(const CircleFunction& f, const ProjectionConfig& cfg) {
  if (!f.is_real()) throw InputError("sphere_project: real-valued input expected");
  if (cfg.oversample < 1) throw InputError("sphere_project: oversample must be positive");
  const int n_out = cfg.bandwidth_out > 0 ? cfg.bandwidth_out : f.bandwidth();
  Samples s = to_samples(f, grid_size(cfg.oversample, n_out));
  normalize_samples(s, cfg.min_norm);
  return fit_samples(s, n_out);
}

FlowTrajectory run_flow(const CircleFunction& f0, const FlowConfig& cfg) {
  if (!f0.is_real()) throw InputError("run_flow: real-valued initial datum expected");
  const int big_n = cfg.bandwidth > 0 ? cfg.bandwidth : f0.bandwidth();
  if (big_n < 1) throw InputError("run_flow: bandwidth must be at least 1");
  if (!(cfg.step >= 0.0) || cfg.step * big_n > 1.0) {
    throw InputError("run_flow: step must satisfy 0 <= step*bandwidth <= 1");
  }
  if (!(cfg.tol > 0.0)) throw InputError("run_flow: tol must be positive");
  if (cfg.max_iter < 0 || cfg.oversample < 2 || cfg.max_halvings < 0) {
    throw InputError("run_flow: max_iter, oversample and max_halvings out of range");
  }

  const ProjectionConfig proj{cfg.oversample, big_n, 1e-8};
  const std::size_t m = grid_size(cfg.oversample, big_n);
  const double cell = kTwoPi / static_cast<double>(m);

  FlowTrajectory out;
  FlowState state{sphere_project(f0.resized(big_n), proj).function, 0.0};
  state.energy = energy_spectral(state.u);

  for (int it = 0;; ++it) {
    const Samples us = to_samples(state.u, m);
    const Samples grad = to_samples(fractional_laplacian(state.u, 0.5), m);
    Samples tang = us;
    double residual = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      tangential(us.at(j), grad.at(j), tang.at(j));
      for (const auto& v : tang.at(j)) residual += std::norm(v);
    }
    residual = std::sqrt(residual * cell);

    FlowRecord rec;
    rec.iteration = it;
    rec.energy = state.energy;
    rec.tangential_residual = residual;
    rec.stationarity = fractional_hopf_coeffs(state.u).max_coeff;
    if (!std::isfinite(residual) || !std::isfinite(state.energy)) {
      throw FlowError("run_flow: non-finite iterate at iteration " + std::to_string(it));
    }
    if (residual <= cfg.tol) {
      out.converged = true;
      out.records.push_back(rec);
      break;
    }
    if (it >= cfg.max_iter) {
      out.records.push_back(rec);
      break;
    }
    if (cfg.step == 0.0) {
      out.records.push_back(rec);
      continue;
    }

    double tau = cfg.step;
    bool accepted = false;
    for (int halving = 0; halving <= cfg.max_halvings; ++halving, tau *= 0.5) {
      Samples next = us;
      for (std::size_t k = 0; k < next.values.size(); ++k) next.values[k] -= tau * tang.values[k];
      normalize_samples(next, proj.min_norm);
      CircleFunction candidate = fit_samples(next, big_n).function;
      const double e = energy_spectral(candidate);
      if (e <= state.energy + cfg.energy_slack * (1.0 + state.energy)) {
        rec.step = tau;
        rec.halvings = halving;
        state = {std::move(candidate), e};
        accepted = true;
        break;
      }
    }
    out.records.push_back(rec);
    if (!accepted) {
      throw FlowError("run_flow: energy increased at iteration " + std::to_string(it) + " after " +
                      std::to_string(cfg.max_halvings) + " step halvings");
    }
  }
  out.final = std::move(state.u);
  return out;
}

void write_trajectory_csv(std::ostream& out, const FlowTrajectory& trajectory) {
  out << "iteration,energy,tangential_residual,stationarity_residual\n" << std::setprecision(17);
  for (const auto& r : trajectory.records) {
    out << r.iteration << ',' << r.energy << ',' << r.tangential_residual << ',' << r.stationarity << '\n';
  }
}

}  // namespace halfhopf
