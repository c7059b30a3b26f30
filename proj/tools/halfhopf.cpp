#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "halfhopf/energy.hpp"
#include "halfhopf/errors.hpp"
#include "halfhopf/flows.hpp"
#include "halfhopf/hopf.hpp"
#include "halfhopf/io.hpp"
#include "halfhopf/operators.hpp"
#include "halfhopf/suites.hpp"
#include "halfhopf/variation.hpp"

namespace fs = std::filesystem;
using namespace halfhopf;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kNotStationary = 3, kNotConverged = 4 };

struct GridSpec {
  int radial = 16;
  int angular = 64;
};

GridSpec parse_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--grid: expected R:T, got '" + text + "'");
  GridSpec g;
  try {
    std::size_t used = 0;
    g.radial = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(colon + 1);
    g.angular = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw InputError("--grid: expected two integers R:T, got '" + text + "'");
  }
  if (g.radial < 1 || g.angular < 1) throw InputError("--grid: resolutions must be positive");
  return g;
}

// Collects artifacts and writes them, plus manifest.json, at the end.
class Output {
 public:
  Output(std::string command, std::string dir) : command_(std::move(command)), dir_(std::move(dir)) {}

  bool to_directory() const { return !dir_.empty(); }

  void add(const std::string& name, std::string content) { files_.push_back({name, std::move(content)}); }

  void write(const Json& parameters, const std::string& input, std::optional<std::uint64_t> seed) const {
    if (!to_directory()) {
      for (const auto& f : files_) std::cout << f.second;
      return;
    }
    fs::create_directories(dir_);
    Json outputs = Json::array();
    for (const auto& f : files_) {
      std::ofstream out(fs::path(dir_) / f.first, std::ios::binary);
      if (!out) throw InputError("cannot write " + (fs::path(dir_) / f.first).string());
      out << f.second;
      outputs.push_back(f.first);
    }
    outputs.push_back("manifest.json");
    const Json manifest = {{"command", command_},
                           {"input", input.empty() ? Json(nullptr) : Json(input)},
                           {"parameters", parameters},
                           {"seed", seed ? Json(*seed) : Json(nullptr)},
                           {"outputs", outputs},
                           {"version", kVersion}};
    std::ofstream out(fs::path(dir_) / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << '\n';
  }

 private:
  std::string command_;
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_finite(const Json& j, const char* what) {
  if (contains_non_finite(j)) throw ResolutionError(std::string(what) + " contains NaN or infinite values");
}

int cmd_analyze(const std::string& input, double tol, const std::string& grid_text, const std::string& out_dir) {
  const CircleFunction f = read_circle_function(input);
  const GridSpec g = parse_grid(grid_text);
  std::vector<double> deltas;
  for (int i = 0; i < 8; ++i) deltas.push_back(i * kPi / 4.0);

  const HopfReport hopf = hopf_report(f, {g.radial, g.angular, 0.95});
  const NormReport norms = norm_report(f, {0.5, 1.0});
  Json residuals;
  if (f.is_real()) residuals = to_json(residual_report(f, deltas));
  const bool stationary = hopf.max_coeff <= tol;

  const Json report = {{"command", "analyze"},
                       {"tol", tol},
                       {"stationary", stationary},
                       {"stationarity", hopf.max_coeff},
                       {"hopf", to_json(hopf)},
                       {"norms", to_json(norms)},
                       {"residuals", residuals}};
  require_finite(report, "analyze report");

  Output out("analyze", out_dir);
  out.add("report.json", dump(report));
  if (out.to_directory()) {
    std::ostringstream csv;
    write_disc_samples_csv(csv, hopf.disc_samples);
    out.add("hopf_disc.csv", csv.str());
  }
  out.write({{"tol", tol}, {"grid", grid_text}}, input, std::nullopt);
  return stationary ? kOk : kNotStationary;
}

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed, const std::string& out_dir) {
  const auto results = run_suite(suite, trials, seed);
  Json suites = Json::array();
  bool passed = true;
  for (const auto& r : results) {
    suites.push_back(to_json(r));
    passed = passed && r.passed();
  }
  const Json report = {{"command", "verify"}, {"suite", suite}, {"passed", passed}, {"suites", suites}};
  // failing inputs may legitimately hold huge ratios but never NaN
  require_finite(report, "verify report");
  Output out("verify", out_dir);
  out.add("report.json", dump(report));
  out.write({{"suite", suite}, {"trials", trials}}, "", seed);
  if (!passed) {
    for (const auto& r : results) {
      for (const auto& f : r.failures) {
        std::cerr << "verify " << r.suite << ": " << f.check << " = " << f.value << " exceeds " << f.limit
                  << " (seed " << f.seed << ")\n";
      }
    }
  }
  return passed ? kOk : kVerifyFailed;
}

int cmd_flow(const std::string& input, FlowConfig cfg, bool step_given, const std::string& out_dir) {
  const CircleFunction f0 = read_circle_function(input);
  const int big_n = cfg.bandwidth > 0 ? cfg.bandwidth : f0.bandwidth();
  if (!step_given) cfg.step = big_n > 0 ? 1.0 / big_n : 0.0;
  const FlowTrajectory t = run_flow(f0, cfg);
  const Json traj = to_json(t);
  require_finite(traj, "flow trajectory");

  Output out("flow", out_dir);
  if (out.to_directory()) {
    std::ostringstream csv;
    write_trajectory_csv(csv, t);
    out.add("trajectory.csv", csv.str());
    out.add("final.json", dump(to_json(t.final)));
  } else {
    out.add("trajectory.json", dump(traj));
  }
  out.write({{"step", cfg.step},
             {"max_iter", cfg.max_iter},
             {"tol", cfg.tol},
             {"oversample", cfg.oversample},
             {"bandwidth", big_n}},
            input, std::nullopt);
  return t.converged ? kOk : kNotConverged;
}

int cmd_export(const std::string& input, const std::string& grid_text, const std::string& out_dir) {
  const CircleFunction f = read_circle_function(input);
  const GridSpec g = parse_grid(grid_text);
  std::ostringstream csv;
  csv << "r,theta";
  for (int c = 0; c < f.dim(); ++c) csv << ",u" << c << "_re,u" << c << "_im";
  csv << ",hopf_re,hopf_im,hopf_abs\n" << std::setprecision(17);
  for (int i = 0; i < g.radial; ++i) {
    const double r = static_cast<double>(i) / g.radial;
    for (int j = 0; j < g.angular; ++j) {
      const DiskPoint p{r, grid_angle(static_cast<std::size_t>(j), static_cast<std::size_t>(g.angular))};
      const auto ext = harmonic_extension_eval(f, p);
      const Complex h = hopf_differential_at(f, p.z());
      if (!std::isfinite(std::abs(h))) throw ResolutionError("export: non-finite Hopf value");
      csv << p.r << ',' << p.theta;
      for (const auto& v : ext) {
        if (!std::isfinite(std::abs(v))) throw ResolutionError("export: non-finite extension value");
        csv << ',' << v.real() << ',' << v.imag();
      }
      csv << ',' << h.real() << ',' << h.imag() << ',' << std::abs(h) << '\n';
    }
  }
  Output out("export", out_dir);
  out.add("extension.csv", csv.str());
  out.write({{"grid", grid_text}}, input, std::nullopt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-energy stationarity toolkit for maps from the circle"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string input;
  std::string out_dir;
  double tol = 1e-8;
  std::string grid = "16:64";

  auto* analyze = app.add_subcommand("analyze", "Residuals, norms and Hopf coefficients of a function");
  analyze->add_option("--input", input, "CircleFunction JSON")->required();
  analyze->add_option("--tol", tol, "Stationarity tolerance on max_k |c_k|");
  analyze->add_option("--grid", grid, "Disc grid R:T for Hopf samples");
  analyze->add_option("--out", out_dir, "Output directory (stdout when absent)");

  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Randomized identity suites");
  verify->add_option("suite", suite, "pohozaev|noether|mobius|commutator|hopf-paths|all")
      ->required()
      ->check(CLI::IsMember({"pohozaev", "noether", "mobius", "commutator", "hopf-paths", "all"}));
  verify->add_option("--trials", trials, "Random trials per suite");
  verify->add_option("--seed", seed, "Base seed; trial i uses seed + i");
  verify->add_option("--out", out_dir, "Output directory (stdout when absent)");

  FlowConfig flow_cfg;
  double flow_tol = 1e-6;
  auto* flow = app.add_subcommand("flow", "Projected half-gradient flow onto the sphere");
  flow->add_option("--input", input, "Initial CircleFunction JSON")->required();
  auto* step_opt = flow->add_option("--step", flow_cfg.step, "Step size (default 1/bandwidth)");
  flow->add_option("--max-iter", flow_cfg.max_iter, "Iteration cap");
  flow->add_option("--tol", flow_tol, "Tangential residual target");
  flow->add_option("--oversample", flow_cfg.oversample, "Grid oversampling factor");
  flow->add_option("--bandwidth", flow_cfg.bandwidth, "Working bandwidth (default: input bandwidth)");
  flow->add_option("--out", out_dir, "Output directory (stdout when absent)");

  auto* exp = app.add_subcommand("export", "Harmonic extension and Hopf differential on a polar grid");
  exp->add_option("--input", input, "CircleFunction JSON")->required();
  exp->add_option("--grid", grid, "Grid R:T with radii i/R and angles 2pi j/T");
  exp->add_option("--out", out_dir, "Output directory (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*analyze) return cmd_analyze(input, tol, grid, out_dir);
    if (*verify) return cmd_verify(suite, trials, seed, out_dir);
    if (*flow) {
      flow_cfg.tol = flow_tol;
      return cmd_flow(input, flow_cfg, step_opt->count() > 0, out_dir);
    }
    if (*exp) return cmd_export(input, grid, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "halfhopf: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
