#include "halfhopf/io.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "halfhopf/errors.hpp"

namespace halfhopf {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError(field + ": " + what);
}

const Json& member(const Json& j, const char* key) {
  if (!j.contains(key)) fail(key, "missing");
  return j.at(key);
}

int integer_field(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) fail(field, "integer out of range");
  return static_cast<int>(v);
}

double number_field(const Json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "expected a finite number");
  return v;
}

Complex complex_field(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected [re, im]");
  return {number_field(j[0], field + "[0]"), number_field(j[1], field + "[1]")};
}

}  // namespace

Json to_json(const CircleFunction& f) {
  Json coeffs = Json::array();
  for (int n = -f.bandwidth(); n <= f.bandwidth(); ++n) {
    Json vec = Json::array();
    for (const auto& v : f.mode(n)) vec.push_back(complex_json(v));
    coeffs.push_back(Json::array({n, vec}));
  }
  return {{"bandwidth", f.bandwidth()}, {"dim", f.dim()}, {"real", f.is_real()}, {"coeffs", coeffs}};
}

CircleFunction circle_function_from_json(const Json& j) {
  if (!j.is_object()) fail("<root>", "expected an object");
  const int big_n = integer_field(member(j, "bandwidth"), "bandwidth");
  const int dim = integer_field(member(j, "dim"), "dim");
  if (big_n < 0) fail("bandwidth", "must be non-negative");
  if (dim < 1) fail("dim", "must be at least 1");
  const Json& real = member(j, "real");
  if (!real.is_boolean()) fail("real", "expected true or false");
  const Json& coeffs = member(j, "coeffs");
  if (!coeffs.is_array()) fail("coeffs", "expected an array");
  for (const auto& [key, value] : j.items()) {
    if (key != "bandwidth" && key != "dim" && key != "real" && key != "coeffs") fail(key, "unknown field");
  }

  CircleFunction f(big_n, dim, real.get<bool>());
  std::set<int> seen;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string at = "coeffs[" + std::to_string(i) + "]";
    const Json& entry = coeffs[i];
    if (!entry.is_array() || entry.size() != 2) fail(at, "expected [n, [[re, im], ...]]");
    const int n = integer_field(entry[0], at + "[0]");
    if (n < -big_n || n > big_n) fail(at + "[0]", "frequency " + std::to_string(n) + " outside bandwidth");
    if (!seen.insert(n).second) fail(at + "[0]", "frequency " + std::to_string(n) + " listed twice");
    const Json& vec = entry[1];
    if (!vec.is_array() || vec.size() != static_cast<std::size_t>(dim)) {
      fail(at + "[1]", "expected " + std::to_string(dim) + " complex entries");
    }
    for (int c = 0; c < dim; ++c) {
      f.coeff_ref(n, c) = complex_field(vec[static_cast<std::size_t>(c)], at + "[1][" + std::to_string(c) + "]");
    }
  }
  if (f.is_real()) {
    for (int n = 0; n <= big_n; ++n) {
      for (int c = 0; c < dim; ++c) {
        if (f.coeff(-n, c) != std::conj(f.coeff(n, c))) {
          fail("coeffs", "real function violates conjugate symmetry at n = " + std::to_string(n) +
                             ", component " + std::to_string(c));
        }
      }
    }
  }
  return f;
}

CircleFunction read_circle_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return circle_function_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json to_json(const MobiusMap& m) { return {{"a", complex_json(m.a())}, {"mu", complex_json(m.mu())}}; }

MobiusMap mobius_from_json(const Json& j) {
  if (!j.is_object()) fail("<root>", "expected an object");
  return {complex_field(member(j, "a"), "a"), complex_field(member(j, "mu"), "mu")};
}

Json to_json(const HopfReport& r) {
  Json coeffs = Json::array();
  Json weighted = Json::array();
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    coeffs.push_back(Json::array({k, complex_json(r.coeffs[i])}));
    weighted.push_back(Json::array({k, complex_json(r.weighted[i])}));
  }
  return {{"coeffs", coeffs},
          {"weighted", weighted},
          {"max_coeff", r.max_coeff},
          {"max_weighted", r.max_weighted},
          {"max_disc", r.max_disc},
          {"disc_samples", r.disc_samples.size()}};
}

Json to_json(const ResidualReport& r) {
  Json pohozaev = Json::array();
  for (const auto& p : r.pohozaev) pohozaev.push_back(Json::array({p.delta, p.value}));
  Json noether = Json::array();
  for (const auto& n : r.noether) noether.push_back(Json::array({n.field, n.value}));
  return {{"stationarity", r.stationarity},
          {"stationarity_weighted", r.stationarity_weighted},
          {"variation_l2", r.variation_l2},
          {"balancing", Json::array({r.balancing.squared_norms, r.balancing.cross})},
          {"pohozaev", pohozaev},
          {"rotation_pohozaev", r.rotation_pohozaev},
          {"noether", noether}};
}

Json to_json(const NormReport& r) {
  Json sob = Json::array();
  for (const auto& e : r.sobolev) {
    sob.push_back({{"s", e.s}, {"inhomogeneous", e.norm.inhomogeneous}, {"homogeneous", e.norm.homogeneous}});
  }
  return {{"energy_spectral", r.energy_spectral},
          {"energy_gagliardo", r.energy_gagliardo},
          {"quadrature_points", r.quadrature_points},
          {"sobolev", sob},
          {"wiener", r.wiener}};
}

Json to_json(const FlowTrajectory& t) {
  Json records = Json::array();
  for (const auto& r : t.records) {
    records.push_back({{"iteration", r.iteration},
                       {"energy", r.energy},
                       {"tangential_residual", r.tangential_residual},
                       {"stationarity_residual", r.stationarity},
                       {"step", r.step},
                       {"halvings", r.halvings}});
  }
  return {{"converged", t.converged}, {"records", records}, {"final", to_json(t.final)}};
}

bool contains_non_finite(const Json& j) {
  if (j.is_number_float()) return !std::isfinite(j.get<double>());
  if (j.is_array() || j.is_object()) {
    for (const auto& v : j) {
      if (contains_non_finite(v)) return true;
    }
  }
  return false;
}

}  // namespace halfhopf
