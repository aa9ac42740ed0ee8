// SPDX-License-Identifier: Apache-2.0

#include "hgtf/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hgtf/fft.hpp"

namespace hgtf {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;
const Complex kImagPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // i^n

void check_axes_cover_signal(const Signal& signal, const WindowSpec& spec,
                             const UniformAxis& time_axis, const UniformAxis& omega_axis,
                             Diagnostics* diag) {
  if (signal.dt > spec.delta_t / 8.0)
    warn_into(diag, "analyze: signal step above delta_t/8, window under-resolved");
  if (!(signal.energy() > 0.0)) return;
  const MomentReport m = moments(signal);
  const double pad_t = spec.sigma_t();
  if (time_axis.start > m.mu_t - 2.0 * m.sigma_t - pad_t ||
      time_axis.back() < m.mu_t + 2.0 * m.sigma_t + pad_t)
    warn_into(diag, "analyze: T axis does not cover the signal's effective time support");
  const double pad_w = spec.sigma_omega();
  if (omega_axis.start > m.mu_omega - 2.0 * m.sigma_omega - pad_w ||
      omega_axis.back() < m.mu_omega + 2.0 * m.sigma_omega + pad_w)
    warn_into(diag, "analyze: Omega axis does not cover the signal's effective bandwidth");
}

}  // namespace

TFGrid analyze(const Signal& signal, const WindowSpec& spec, const UniformAxis& time_axis,
               const UniformAxis& omega_axis, Diagnostics* diag) {
  check_axes_cover_signal(signal, spec, time_axis, omega_axis, diag);

  const double root = std::numbers::sqrt2 * spec.delta_t;
  const double scale = signal.dt / (std::sqrt(root) * kSqrt2Pi);
  const Eigen::ArrayXd t = signal.times();
  const fft::ChirpZ slice(signal.size(), signal.t0, signal.dt, omega_axis, -1);

  TFGrid grid;
  grid.values.resize(time_axis.count, omega_axis.count);
  grid.time_axis = time_axis;
  grid.omega_axis = omega_axis;
  grid.window = spec;
  grid.kind = GridKind::psi_n;

  for (Eigen::Index i = 0; i < time_axis.count; ++i) {
    const Eigen::ArrayXd envelope = hermite_fn(spec.order, (t - time_axis[i]) / root);
    grid.values.row(i) = (scale * slice.apply(envelope * signal.samples)).transpose();
  }
  return grid;
}

TFGrid analyze_freq(const Signal& signal, const WindowSpec& spec, const UniformAxis& time_axis,
                    const UniformAxis& omega_axis, Diagnostics* diag) {
  const Spectrum spectrum = forward_ft(signal, diag);
  const double dw = spec.delta_omega();
  const double root = std::numbers::sqrt2 * dw;
  const double scale = spectrum.domega / (std::sqrt(root) * kSqrt2Pi);
  const Eigen::ArrayXd w = spectrum.omegas();
  // conj of the window transform's (-i)^n phase
  const Complex phase_n = kImagPowers[spec.order % 4];
  const fft::ChirpZ slice(spectrum.size(), spectrum.omega0, spectrum.domega, time_axis, +1);

  TFGrid grid;
  grid.values.resize(time_axis.count, omega_axis.count);
  grid.time_axis = time_axis;
  grid.omega_axis = omega_axis;
  grid.window = spec;
  grid.kind = GridKind::psi_n;

  for (Eigen::Index j = 0; j < omega_axis.count; ++j) {
    const Eigen::ArrayXd envelope = hermite_fn(spec.order, (w - omega_axis[j]) / root);
    Eigen::ArrayXcd column = slice.apply(envelope * spectrum.values);
    for (Eigen::Index i = 0; i < time_axis.count; ++i)
      column[i] *= phase_n * scale * std::polar(1.0, -time_axis[i] * omega_axis[j]);
    grid.values.col(j) = column;
  }
  return grid;
}

Complex analyze_point(const Signal& signal, const WindowSpec& spec, const TFPoint& point) {
  const Eigen::ArrayXcd window = phi_samples(spec, point, signal.times());
  return (window.conjugate() * signal.samples).sum() * signal.dt / kSqrt2Pi;
}

TFDensity energy_density(const TFGrid& grid) {
  if (grid.kind != GridKind::psi_n && grid.kind != GridKind::gabor)
    throw std::invalid_argument("energy_density: grid kind must be psi_n or gabor");
  TFDensity out;
  out.values = grid.values.abs2();
  out.time_axis = grid.time_axis;
  out.omega_axis = grid.omega_axis;
  out.window = grid.window;
  out.kind = GridKind::energy_density;
  return out;
}

Marginal marginal_time(const Signal& signal, const WindowSpec& spec,
                       const UniformAxis& time_axis) {
  const Eigen::ArrayXd t = signal.times();
  const Eigen::ArrayXd power = signal.samples.abs2();
  Marginal out;
  out.axis = time_axis;
  out.values.resize(time_axis.count);
  out.window = spec;
  out.which = Marginal::Which::time;
  for (Eigen::Index i = 0; i < time_axis.count; ++i) {
    const Eigen::ArrayXd kernel = phi_abs2_samples(spec, time_axis[i], t);
    out.values[i] = (kernel * power).sum() * signal.dt;
  }
  return out;
}

Marginal marginal_freq(const Signal& signal, const WindowSpec& spec,
                       const UniformAxis& omega_axis) {
  const Spectrum spectrum = forward_ft(signal);
  const Eigen::ArrayXd w = spectrum.omegas();
  const Eigen::ArrayXd power = spectrum.values.abs2();
  const double dw = spec.delta_omega();
  const double root = std::numbers::sqrt2 * dw;
  Marginal out;
  out.axis = omega_axis;
  out.values.resize(omega_axis.count);
  out.window = spec;
  out.which = Marginal::Which::frequency;
  for (Eigen::Index j = 0; j < omega_axis.count; ++j) {
    const Eigen::ArrayXd kernel =
        hermite_fn(spec.order, (w - omega_axis[j]) / root).square() / root;
    out.values[j] = (kernel * power).sum() * spectrum.domega;
  }
  return out;
}

double energy_of_grid(const TFGrid& grid, Diagnostics* diag) {
  if (grid.kind != GridKind::psi_n && grid.kind != GridKind::gabor)
    throw std::invalid_argument("energy_of_grid: grid kind must be psi_n or gabor");
  const Eigen::ArrayXXd density = grid.values.abs2();
  const double peak = density.maxCoeff();
  if (peak > 0.0) {
    const double boundary =
        std::max({density.row(0).maxCoeff(), density.row(density.rows() - 1).maxCoeff(),
                  density.col(0).maxCoeff(), density.col(density.cols() - 1).maxCoeff()});
    if (boundary > 1e-8 * peak)
      warn_into(diag, "energy_of_grid: boundary density above 1e-8 of peak, grid truncates support");
  }
  return density.sum() * grid.time_axis.step * grid.omega_axis.step;
}

UniformAxis default_time_axis(const Signal& signal, Eigen::Index max_points) {
  const Eigen::Index stride = (signal.size() + max_points - 1) / max_points;
  const Eigen::Index count = (signal.size() + stride - 1) / stride;
  return UniformAxis(signal.t0, signal.dt * double(stride), count);
}

UniformAxis default_omega_axis(const Signal& signal, Eigen::Index max_points) {
  const Eigen::Index n = signal.size();
  const double domega = 2.0 * std::numbers::pi / (double(n) * signal.dt);
  const Eigen::Index stride = (n + max_points - 1) / max_points;
  const Eigen::Index count = (n + stride - 1) / stride;
  return UniformAxis(-double(n / 2) * domega, domega * double(stride), count);
}

}  // namespace hgtf
