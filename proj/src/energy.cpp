#include "halfhopf/energy.hpp"

#include <cmath>
#include <cstdlib>

#include "halfhopf/errors.hpp"

namespace halfhopf {

double energy_spectral(const CircleFunction& f) {
  double sum = 0.0;
  for (int n = 1; n <= f.bandwidth(); ++n) {
    double mass = 0.0;
    for (int c = 0; c < f.dim(); ++c) mass += std::norm(f.coeff(n, c)) + std::norm(f.coeff(-n, c));
    sum += n * mass;
  }
  return kTwoPi * sum;
}

double energy_gagliardo(const CircleFunction& f, int m) {
  if (m < 1 || m < 4 * f.bandwidth()) {
    throw InputError("energy_gagliardo: need M >= 4N quadrature points");
  }
  const auto mm = static_cast<std::size_t>(m);
  const Samples on_grid = to_samples(f, mm);
  // half-cell shift: y_j = θ_j + π/M
  const Samples shifted = to_samples(rotate(f, kPi / m), mm);
  const int k = f.dim();

  // chordal distance² depends only on the grid offset x_i − y_j
  std::vector<double> inv_chord(mm);
  for (std::size_t d = 0; d < mm; ++d) {
    const double t = kTwoPi * (static_cast<double>(d) - 0.5) / m;
    const double chord = 2.0 * std::sin(0.5 * t);
    inv_chord[d] = 1.0 / (chord * chord);
  }

  double total = 0.0;
  for (std::size_t i = 0; i < mm; ++i) {
    const auto ux = on_grid.at(i);
    double row = 0.0;
    for (std::size_t j = 0; j < mm; ++j) {
      const auto uy = shifted.at(j);
      double diff = 0.0;
      for (int c = 0; c < k; ++c) diff += std::norm(ux[static_cast<std::size_t>(c)] - uy[static_cast<std::size_t>(c)]);
      row += diff * inv_chord[(i + mm - j) % mm];
    }
    total += row;
  }
  const double cell = kTwoPi / m;
  return total * cell * cell / kTwoPi;
}

SobolevNorm sobolev_norm(const CircleFunction& f, double s) {
  SobolevNorm out;
  double inhom = 0.0;
  double hom = 0.0;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    double mass = 0.0;
    for (int c = 0; c < f.dim(); ++c) mass += std::norm(f.coeff(n, c));
    const double nn = static_cast<double>(n) * n;
    inhom += std::pow(1.0 + nn, s) * mass;
    if (n != 0) hom += std::pow(static_cast<double>(std::abs(n)), 2.0 * s) * mass;
  }
  out.inhomogeneous = std::sqrt(inhom);
  out.homogeneous = std::sqrt(hom);
  return out;
}

double wiener_norm(const CircleFunction& f) {
  double sum = 0.0;
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    double mass = 0.0;
    for (int c = 0; c < f.dim(); ++c) mass += std::norm(f.coeff(n, c));
    sum += std::sqrt(mass);
  }
  return sum;
}

NormReport norm_report(const CircleFunction& f, const std::vector<double>& sobolev_orders, int quadrature_points) {
  NormReport out;
  out.quadrature_points = quadrature_points > 0 ? quadrature_points : 8 * (2 * f.bandwidth() + 1);
  out.energy_spectral = energy_spectral(f);
  out.energy_gagliardo = energy_gagliardo(f, out.quadrature_points);
  for (double s : sobolev_orders) out.sobolev.push_back({s, sobolev_norm(f, s)});
  out.wiener = wiener_norm(f);
  return out;
}

}  // namespace halfhopf
