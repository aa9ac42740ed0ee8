// SPDX-License-Identifier: Apache-2.0
//
// hgtf — harmonic Gaussian time-frequency analysis from the command line.
//
// Exit codes: 0 success, 1 usage error, 2 input-data error, 3 numerical
// diagnostic failure under --strict.

#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "hgtf/baselines.hpp"
#include "hgtf/generators.hpp"
#include "hgtf/io.hpp"
#include "hgtf/reconstruct.hpp"
#include "hgtf/transform.hpp"

namespace fs = std::filesystem;
using namespace hgtf;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  Eigen::Index count = 0;
};

struct InputOptions {
  std::string file;
  std::string format = "csv";
  std::string gen;
  double gen_t0 = -16.0;
  double gen_dt = 1.0 / 32.0;
  Eigen::Index gen_count = 1024;
};

struct OutputOptions {
  std::string out_dir;
  std::vector<std::string> formats = {"csv", "ppm"};
  std::string scale = "linear";
  double floor = 1e-6;
  bool strict = false;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("--in", in.file, "Input signal file");
  cmd->add_option("--format", in.format, "Input file format: csv | f64le (default csv)")
      ->check(CLI::IsMember({"csv", "f64le"}));
  auto* gen = cmd->add_option(
      "--gen", in.gen,
      "Generator spec kind:key=value,... ; kinds: gaussian_pulse, linear_chirp, two_tones, "
      "harmonic_gaussian, impulse_like (e.g. linear_chirp:rate=2,sigma=1.5)");
  cmd->add_option("--gen-t0", in.gen_t0, "Generator grid start time (s, default -16)");
  cmd->add_option("--gen-dt", in.gen_dt, "Generator grid step (s, default 1/32)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--gen-count", in.gen_count, "Generator sample count (default 1024)")
      ->check(CLI::PositiveNumber);
  file->excludes(gen);
  gen->excludes(file);
}

void add_axis_flags(CLI::App* cmd, AxisSpec& t, AxisSpec& w) {
  cmd->add_option("--t-min", t.min, "T axis minimum (s)");
  cmd->add_option("--t-max", t.max, "T axis maximum (s)");
  cmd->add_option("--t-count", t.count, "T axis point count (>= 2)");
  cmd->add_option("--omega-min", w.min, "Omega axis minimum (rad/s)");
  cmd->add_option("--omega-max", w.max, "Omega axis maximum (rad/s)");
  cmd->add_option("--omega-count", w.count, "Omega axis point count (>= 2)");
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.out_dir, "Output directory (created if missing)")->required();
  cmd->add_option("--formats", out.formats,
                  "Output signal/grid formats, comma-separated subset of csv,f64le,ppm")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "f64le", "ppm"}));
  cmd->add_option("--scale", out.scale, "Heatmap scale: linear | log")
      ->check(CLI::IsMember({"linear", "log"}));
  cmd->add_option("--floor", out.floor, "Log-scale clamp as a fraction of the maximum")
      ->check(CLI::Range(1e-308, 0.999999));
  cmd->add_flag("--strict", out.strict,
                "Exit with code 3 when any numerical diagnostic is raised");
}

std::map<std::string, double> parse_gen_params(const std::string& body) {
  std::map<std::string, double> params;
  size_t pos = 0;
  while (pos < body.size()) {
    const size_t comma = body.find(',', pos);
    const std::string item =
        body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("generator parameter '" + item + "' is not key=value");
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("generator parameter '" + item + "' has a malformed value");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return params;
}

Signal load_signal(const InputOptions& in) {
  if (!in.gen.empty()) {
    const size_t colon = in.gen.find(':');
    const std::string kind = in.gen.substr(0, colon);
    const auto params =
        parse_gen_params(colon == std::string::npos ? "" : in.gen.substr(colon + 1));
    return generate(kind, params, UniformAxis(in.gen_t0, in.gen_dt, in.gen_count));
  }
  if (in.file.empty()) throw UsageError("exactly one input source required: --in or --gen");
  return read_signal(in.file, in.format);
}

bool axis_given(const CLI::App* cmd, const char* stem) {
  for (const char* suffix : {"-min", "-max", "-count"}) {
    const auto* opt = cmd->get_option_no_throw(std::string("--") + stem + suffix);
    if (opt && opt->count() > 0) return true;
  }
  return false;
}

UniformAxis resolve_axis(bool given, const AxisSpec& spec, const UniformAxis& fallback,
                         const char* what) {
  if (!given) return fallback;
  if (!(spec.count >= 2) || !(spec.max > spec.min))
    throw UsageError(std::string(what) + " axis needs min < max and count >= 2 together");
  return UniformAxis::spanning(spec.min, spec.max, spec.count);
}

HeatmapScale scale_of(const OutputOptions& out) {
  return out.scale == "log" ? HeatmapScale::log : HeatmapScale::linear;
}

bool wants(const OutputOptions& out, const std::string& format) {
  return std::find(out.formats.begin(), out.formats.end(), format) != out.formats.end();
}

void add_moment_entries(Report& report, const MomentReport& m) {
  report.set("energy", m.energy);
  report.set("mu_t", m.mu_t);
  report.set("sigma_t", m.sigma_t);
  report.set("mu_omega", m.mu_omega);
  report.set("sigma_omega", m.sigma_omega);
  report.set("uncertainty_product", m.uncertainty_product);
}

int finish(const OutputOptions& out, const Diagnostics& diag) {
  for (const std::string& w : diag.warnings) std::cerr << "warning: " << w << '\n';
  if (out.strict && !diag.empty()) {
    std::cerr << "error: numerical diagnostics raised under --strict\n";
    return 3;
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Harmonic Gaussian time-frequency analysis"};
  app.require_subcommand(1);

  InputOptions in;
  OutputOptions out;
  AxisSpec t_spec, w_spec;
  int order = 0;
  double delta_t = 0.0;
  double point_T = 0.0, point_W = 0.0;
  int n_max = -1;
  std::string route = "series";

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Order-n harmonic Gaussian analysis: Psi grid, density, report");
  add_input_flags(analyze_cmd, in);
  add_output_flags(analyze_cmd, out);
  add_axis_flags(analyze_cmd, t_spec, w_spec);
  analyze_cmd->add_option("--order", order, "Hermite order n (>= 0)")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--delta-t", delta_t, "Window time width Delta t (s, > 0)")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* marginals_cmd =
      app.add_subcommand("marginals", "Time and frequency marginals p_n, rho_n");
  add_input_flags(marginals_cmd, in);
  add_output_flags(marginals_cmd, out);
  add_axis_flags(marginals_cmd, t_spec, w_spec);
  marginals_cmd->add_option("--order", order, "Hermite order n (>= 0)")
      ->check(CLI::NonNegativeNumber);
  marginals_cmd->add_option("--delta-t", delta_t, "Window time width Delta t (s, > 0)")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* wigner_cmd = app.add_subcommand("wigner", "Wigner-Ville distribution");
  add_input_flags(wigner_cmd, in);
  add_output_flags(wigner_cmd, out);
  add_axis_flags(wigner_cmd, t_spec, w_spec);

  auto* gabor_cmd = app.add_subcommand("gabor", "Gabor transform (fixed Gaussian window)");
  add_input_flags(gabor_cmd, in);
  add_output_flags(gabor_cmd, out);
  add_axis_flags(gabor_cmd, t_spec, w_spec);

  auto* moments_cmd = app.add_subcommand("moments", "Energy and time/frequency moments");
  add_input_flags(moments_cmd, in);
  add_output_flags(moments_cmd, out);

  auto* recon_cmd = app.add_subcommand("reconstruct", "Recover the signal from its analysis");
  add_input_flags(recon_cmd, in);
  add_output_flags(recon_cmd, out);
  add_axis_flags(recon_cmd, t_spec, w_spec);
  recon_cmd->add_option("--route", route, "Reconstruction route: series | integral")
      ->check(CLI::IsMember({"series", "integral"}));
  recon_cmd->add_option("--order", order, "Grid order for the integral route")
      ->check(CLI::NonNegativeNumber);
  recon_cmd->add_option("--delta-t", delta_t, "Window time width Delta t (s, > 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  recon_cmd->add_option("--n-max", n_max, "Series truncation order (default: decay rule)")
      ->check(CLI::NonNegativeNumber);
  recon_cmd->add_option("--point-t", point_T,
                        "Series expansion time center T (default: moment center)");
  recon_cmd->add_option("--point-omega", point_W,
                        "Series expansion frequency center (default: moment center)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the specific violation
    return 1;
  }

  CLI::App* sub = app.get_subcommands().at(0);
  const Signal signal = load_signal(in);
  fs::create_directories(out.out_dir);
  const fs::path dir(out.out_dir);
  Diagnostics diag;

  if (sub == moments_cmd) {
    const MomentReport m = moments(signal, &diag);
    Report report;
    add_moment_entries(report, m);
    write_report(dir / "report.txt", report);
    for (const auto& [key, value] : report.entries) std::cout << key << " = " << value << '\n';
    return finish(out, diag);
  }

  const UniformAxis t_axis =
      resolve_axis(axis_given(sub, "t"), t_spec, default_time_axis(signal), "T");
  const UniformAxis w_axis =
      resolve_axis(axis_given(sub, "omega"), w_spec, default_omega_axis(signal), "Omega");

  if (sub == analyze_cmd || sub == gabor_cmd) {
    const bool is_gabor = (sub == gabor_cmd);
    const WindowSpec spec = is_gabor ? WindowSpec(0, 0.5 / std::sqrt(std::numbers::pi))
                                     : WindowSpec(order, delta_t);
    const TFGrid psi = is_gabor ? gabor_transform(signal, t_axis, w_axis, &diag)
                                : analyze(signal, spec, t_axis, w_axis, &diag);
    const TFDensity density = energy_density(psi);
    const double grid_energy = energy_of_grid(psi, &diag);
    const double e = signal.energy();
    const double residual = std::abs(grid_energy - e) / (e > 0.0 ? e : 1.0);
    if (residual > 1e-3)
      diag.warn("analyze: grid energy misses the signal energy by more than 1e-3 relative");

    if (wants(out, "csv")) {
      write_grid_csv(dir / "psi.csv", psi);
      write_grid_csv(dir / "density.csv", density);
    }
    if (wants(out, "ppm"))
      write_heatmap_ppm(dir / "density.ppm", density, scale_of(out), out.floor);

    Report report;
    report.set("kind", std::string(is_gabor ? "gabor" : "hgf"));
    report.set("order", double(spec.order));
    report.set("delta_t", spec.delta_t);
    report.set("delta_omega", spec.delta_omega());
    report.set("energy", e);
    report.set("grid_energy", grid_energy);
    report.set("energy_residual", residual);
    add_moment_entries(report, moments(signal, &diag));
    write_report(dir / "report.txt", report);
    return finish(out, diag);
  }

  if (sub == marginals_cmd) {
    const WindowSpec spec(order, delta_t);
    const Marginal p = marginal_time(signal, spec, t_axis);
    const Marginal rho = marginal_freq(signal, spec, w_axis);
    write_marginal_csv(dir / "p.csv", p);
    write_marginal_csv(dir / "rho.csv", rho);
    const double e = signal.energy();
    if (std::abs(p.integral() - e) > 1e-3 * e || std::abs(rho.integral() - e) > 1e-3 * e)
      diag.warn("marginals: integral misses the signal energy by more than 1e-3 relative");
    Report report;
    report.set("energy", e);
    report.set("p_integral", p.integral());
    report.set("rho_integral", rho.integral());
    report.set("p_residual", std::abs(p.integral() - e) / (e > 0.0 ? e : 1.0));
    report.set("rho_residual", std::abs(rho.integral() - e) / (e > 0.0 ? e : 1.0));
    write_report(dir / "report.txt", report);
    return finish(out, diag);
  }

  if (sub == wigner_cmd) {
    double residue = 0.0;
    const TFDensity w = wigner_ville(signal, t_axis, w_axis, &residue, &diag);
    if (wants(out, "csv")) write_grid_csv(dir / "wigner.csv", w);
    if (wants(out, "ppm")) write_heatmap_ppm(dir / "wigner.ppm", w, scale_of(out), out.floor);
    const double e = signal.energy();
    const double plane = w.values.sum() * t_axis.step * w_axis.step;
    Report report;
    report.set("energy", e);
    report.set("plane_integral", plane);
    report.set("energy_residual", std::abs(plane - e) / (e > 0.0 ? e : 1.0));
    report.set("max_abs", w.values.abs().maxCoeff());
    report.set("bound_E_over_pi", e / std::numbers::pi);
    report.set("min_value", w.values.minCoeff());
    report.set("imag_residue", residue);
    write_report(dir / "report.txt", report);
    return finish(out, diag);
  }

  // reconstruct
  Signal rec;
  Report report;
  if (route == "series") {
    TFPoint center{point_T, point_W};
    const bool t_given = recon_cmd->get_option("--point-t")->count() > 0;
    const bool w_given = recon_cmd->get_option("--point-omega")->count() > 0;
    if (!t_given || !w_given) {
      const MomentReport m = moments(signal, &diag);
      if (!t_given) center.time = m.mu_t;
      if (!w_given) center.omega = m.mu_omega;
    }
    Eigen::ArrayXcd coeffs =
        coefficients_at(signal, center, delta_t, n_max >= 0 ? n_max : 256, &diag);
    if (n_max < 0) coeffs.conservativeResize(default_n_max(coeffs) + 1);
    rec = reconstruct_series(coeffs, center, delta_t, signal.grid());
    report.set("route", std::string("series"));
    report.set("n_max", double(coeffs.size() - 1));
    report.set("point_T", center.time);
    report.set("point_omega", center.omega);
  } else {
    const TFGrid psi = analyze(signal, WindowSpec(order, delta_t), t_axis, w_axis, &diag);
    rec = reconstruct_integral(psi, signal.grid(), &diag);
    report.set("route", std::string("integral"));
    report.set("order", double(order));
  }
  const double err =
      std::sqrt((rec.samples - signal.samples).abs2().sum() / signal.samples.abs2().sum());
  report.set("l2_error", err);
  // reconstruction always ships in both exact and human-readable form
  write_signal_csv(dir / "recon.csv", rec);
  write_signal_f64le(dir / "recon.f64le", rec);
  write_report(dir / "report.txt", report);
  return finish(out, diag);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
