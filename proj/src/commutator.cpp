#include "halfhopf/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "halfhopf/energy.hpp"
#include "halfhopf/errors.hpp"
#include "halfhopf/operators.hpp"

namespace halfhopf {

namespace {

void require_scalar(const CircleFunction& f, const char* what) {
  if (f.dim() != 1) throw InputError(std::string(what) + ": scalar function expected");
}

EstimateProbe finish(double s, double lhs, double rhs, double cap) {
  EstimateProbe p;
  p.s = s;
  p.lhs = lhs;
  p.rhs_bound = rhs;
  p.constant_cap = cap;
  if (rhs > 0.0) {
    p.ratio = lhs / rhs;
    p.violated = !(p.ratio <= cap);
  } else {
    p.ratio = 0.0;
    p.violated = lhs > 0.0;
  }
  return p;
}

}  // namespace

CircleFunction d_s(const CircleFunction& a, const CircleFunction& b, double s) {
  if (!(s > 0.0 && s <= 0.5)) throw InputError("d_s: s must lie in (0, 1/2]");
  return pointwise_dot(fractional_laplacian(a, s), b) - pointwise_dot(fractional_laplacian(b, s), a);
}

CircleFunction commutator_apply(const CircleFunction& a, const CircleFunction& phi, double s) {
  require_scalar(a, "commutator_apply");
  require_scalar(phi, "commutator_apply");
  CircleFunction lhs = fractional_laplacian(multiply(a, phi), s);
  CircleFunction rhs = multiply(a, fractional_laplacian(phi, s));
  return lhs - rhs;
}

double commutator_cap(double s) {
  return kTwoPi * std::pow(3.0, 1.0 - 2.0 * s) * std::sqrt(1.0 + s * s);
}

EstimateProbe probe_commutator_bound(const CircleFunction& a, const CircleFunction& phi, double s) {
  require_scalar(a, "probe_commutator_bound");
  require_scalar(phi, "probe_commutator_bound");
  if (!(s > 0.0 && s < 0.5)) throw InputError("probe_commutator_bound: s must lie in (0, 1/2)");
  const double lhs = l2_norm(commutator_apply(phi, a, s));
  const double rhs = wiener_norm(derivative(phi)) * sobolev_norm(a, 2.0 * s - 1.0).inhomogeneous;
  return finish(s, lhs, rhs, commutator_cap(s));
}

double duality_cap() { return kTwoPi * std::sqrt(1.5 + 4.0); }

EstimateProbe probe_duality_bound(const CircleFunction& a, const CircleFunction& b, const CircleFunction& phi) {
  require_scalar(a, "probe_duality_bound");
  require_scalar(b, "probe_duality_bound");
  require_scalar(phi, "probe_duality_bound");
  const double lhs = std::abs(integrate_product(d_s(a, b, 0.5), phi));
  const double rhs = wiener_norm(fractional_laplacian(phi, 0.75)) * sobolev_norm(a, -0.5).inhomogeneous *
                     sobolev_norm(b, 0.5).inhomogeneous;
  return finish(0.5, lhs, rhs, duality_cap());
}

CircleFunction surrogate_kernel(double s, int bandwidth) {
  if (!(s > 0.0 && s <= 1.0)) throw InputError("surrogate_kernel: s must lie in (0, 1]");
  if (bandwidth < 1) throw InputError("surrogate_kernel: bandwidth must be at least 1");
  CircleFunction k(bandwidth, 1, true);
  for (int n = 1; n <= bandwidth; ++n) {
    const double v = -std::pow(static_cast<double>(n), 2.0 * s) / kTwoPi;
    k.coeff_ref(n) = v;
    k.coeff_ref(-n) = v;
  }
  return k;
}

CircleFunction kernel_apply(const CircleFunction& phi, const CircleFunction& kernel, int m) {
  require_scalar(phi, "kernel_apply");
  require_scalar(kernel, "kernel_apply");
  if (m <= phi.bandwidth() + kernel.bandwidth() || m < 2 * phi.bandwidth() + 1) {
    throw InputError("kernel_apply: " + std::to_string(m) + " quadrature points cannot integrate degree " +
                     std::to_string(phi.bandwidth() + kernel.bandwidth()) + " exactly");
  }
  const auto mm = static_cast<std::size_t>(m);
  const Samples ph = to_samples(phi, mm);
  const Samples ks = to_samples(kernel, mm);
  Samples out;
  out.dim = 1;
  out.real = phi.is_real() && kernel.is_real();
  out.values.assign(mm, Complex{});
  const double w = kTwoPi / static_cast<double>(m);
  for (std::size_t i = 0; i < mm; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < mm; ++j) {
      acc += (ph.values[i] - ph.values[j]) * ks.values[(i + mm - j) % mm];
    }
    out.values[i] = w * acc;
  }
  return fit_samples(out, phi.bandwidth()).function;
}

Complex fractional_divergence_pairing(const CircleFunction& a, const CircleFunction& b, const CircleFunction& phi,
                                      double s, int m) {
  require_scalar(a, "fractional_divergence_pairing");
  require_scalar(b, "fractional_divergence_pairing");
  require_scalar(phi, "fractional_divergence_pairing");
  const int band = a.bandwidth() + b.bandwidth() + phi.bandwidth();
  if (m < 2 * band + 1) {
    throw InputError("fractional_divergence_pairing: need at least " + std::to_string(2 * band + 1) +
                     " quadrature points, got " + std::to_string(m));
  }
  const auto mm = static_cast<std::size_t>(m);
  const CircleFunction kernel = surrogate_kernel(s, std::max(band, 1));
  const Samples as = to_samples(a, mm);
  const Samples bs = to_samples(b, mm);
  const Samples ps = to_samples(phi, mm);
  const Samples ks = to_samples(kernel, mm);
  Complex total{};
  for (std::size_t i = 0; i < mm; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < mm; ++j) {
      row += bs.values[j] * (ps.values[i] - ps.values[j]) * ks.values[(i + mm - j) % mm];
    }
    total += as.values[i] * row;
  }
  const double cell = kTwoPi / static_cast<double>(m);
  return total * cell * cell;
}

void write_probe_csv(std::ostream& out, const std::vector<ProbeRow>& rows) {
  out << "s,lhs,rhs,ratio,cap,seed\n" << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.probe.s << ',' << r.probe.lhs << ',' << r.probe.rhs_bound << ',' << r.probe.ratio << ','
        << r.probe.constant_cap << ',' << r.seed << '\n';
  }
}

}  // namespace halfhopf
