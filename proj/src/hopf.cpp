#include "halfhopf/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "halfhopf/errors.hpp"
#include "halfhopf/variation.hpp"

namespace halfhopf {

std::vector<DiskPoint> DiscGrid::points() const {
  if (radial < 1 || angular < 1) throw InputError("disc grid needs positive resolution");
  if (!(r_max >= 0.0 && r_max < 1.0)) throw InputError("disc grid radii must lie in [0, 1)");
  std::vector<DiskPoint> out;
  out.reserve(static_cast<std::size_t>(radial) * static_cast<std::size_t>(angular));
  for (int i = 0; i < radial; ++i) {
    const double r = radial == 1 ? r_max : r_max * i / (radial - 1);
    for (int j = 0; j < angular; ++j) {
      out.push_back({r, grid_angle(static_cast<std::size_t>(j), static_cast<std::size_t>(angular))});
    }
  }
  return out;
}

Complex HopfReport::coeff(int k) const {
  if (k < 2 || k - 2 >= static_cast<int>(coeffs.size())) return {};
  return coeffs[static_cast<std::size_t>(k - 2)];
}

Complex hopf_differential_at(const CircleFunction& f, Complex z) {
  if (!(std::abs(z) < 1.0)) throw InputError("hopf_differential_at: need |z| < 1");
  const auto dz = dz_extension_eval(f, z);
  Complex acc{};
  for (const auto& v : dz) acc += v * v;
  return acc;
}

Complex hopf_series_at(const HopfReport& report, Complex z) {
  Complex acc{};
  for (auto it = report.coeffs.rbegin(); it != report.coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

HopfReport fractional_hopf_coeffs(const CircleFunction& f) {
  HopfReport out;
  const int big_n = f.bandwidth();
  if (big_n >= 1) out.coeffs.assign(static_cast<std::size_t>(2 * big_n - 1), Complex{});
  for (int m = 1; m <= big_n; ++m) {
    const auto um = f.mode(m);
    for (int n = 1; n <= big_n; ++n) {
      const auto un = f.mode(n);
      Complex dot{};
      for (int c = 0; c < f.dim(); ++c) dot += um[static_cast<std::size_t>(c)] * un[static_cast<std::size_t>(c)];
      out.coeffs[static_cast<std::size_t>(m + n - 2)] += static_cast<double>(m) * static_cast<double>(n) * dot;
    }
  }
  out.weighted.resize(out.coeffs.size());
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    const double k = static_cast<double>(i + 2);
    out.weighted[i] = out.coeffs[i] / (k * k);
    out.max_coeff = std::max(out.max_coeff, std::abs(out.coeffs[i]));
    out.max_weighted = std::max(out.max_weighted, std::abs(out.weighted[i]));
  }
  return out;
}

HopfReport hopf_report(const CircleFunction& f, const DiscGrid& grid) {
  HopfReport out = fractional_hopf_coeffs(f);
  out.disc_samples = sample_hopf(f, grid);
  for (const auto& s : out.disc_samples) out.max_disc = std::max(out.max_disc, std::abs(s.value));
  return out;
}

CircleFunction fractional_hopf_from_variation(const CircleFunction& f) {
  const CircleFunction v = inner_variation(f);
  CircleFunction assembled = v.as_complex() + Complex{0.0, 1.0} * hilbert_transform(v);
  // multiply by e^{-2iθ}/(2i): shift every frequency down by two
  const int big_n = assembled.bandwidth();
  CircleFunction out(big_n + 2, 1, false);
  const Complex factor = 1.0 / Complex{0.0, 2.0};
  for (int n = -big_n; n <= big_n; ++n) out.coeff_ref(n - 2) = factor * assembled.coeff(n);
  return out;
}

std::vector<DiskSample> sample_hopf(const CircleFunction& f, const DiscGrid& grid) {
  std::vector<DiskSample> out;
  for (const auto& p : grid.points()) out.push_back({p, hopf_differential_at(f, p.z())});
  return out;
}

double conformality_defect(const CircleFunction& f, const DiscGrid& grid) {
  double worst = 0.0;
  for (const auto& s : sample_hopf(f, grid)) worst = std::max(worst, std::abs(s.value));
  return worst;
}

void write_disc_samples_csv(std::ostream& out, const std::vector<DiskSample>& samples) {
  out << "r,theta,re,im,abs\n" << std::setprecision(17);
  for (const auto& s : samples) {
    out << s.point.r << ',' << s.point.theta << ',' << s.value.real() << ',' << s.value.imag() << ','
        << std::abs(s.value) << '\n';
  }
}

}  // namespace halfhopf
