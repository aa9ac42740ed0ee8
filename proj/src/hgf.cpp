// SPDX-License-Identifier: Apache-2.0

#include "hgtf/hgf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hgtf {

namespace {

// (-i)^n: the Fourier eigenvalue of the Hermite functions under the
// e^{-i w t} forward convention.
const Complex kFourierPhase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};

void require_finite(const TFPoint& point) {
  if (!std::isfinite(point.time) || !std::isfinite(point.omega))
    throw std::invalid_argument("TFPoint: coordinates must be finite");
}

Eigen::ArrayXcd carrier(const Eigen::Ref<const Eigen::ArrayXd>& t, double omega) {
  Eigen::ArrayXcd out(t.size());
  for (Eigen::Index j = 0; j < t.size(); ++j) out[j] = std::polar(1.0, omega * t[j]);
  return out;
}

// Step fine enough for the envelope's bandwidth plus the carrier. The
// envelope hn((t-T)/(sqrt(2) dt)) occupies |w - 0| <~ (sqrt(2n+1)+8) dw * 2,
// shifted by Omega once the carrier multiplies in.
double adequate_time_step(const WindowSpec& spec, const TFPoint& point) {
  const double band =
      std::abs(point.omega) + 2.0 * (spec.order_factor() + 8.0) * spec.delta_omega();
  return std::min(spec.delta_t / 8.0, std::numbers::pi / (4.0 * band));
}

}  // namespace

Complex phi(const WindowSpec& spec, const TFPoint& point, double t) {
  require_finite(point);
  const double x = (t - point.time) / (std::numbers::sqrt2 * spec.delta_t);
  const double c = 1.0 / std::sqrt(std::numbers::sqrt2 * spec.delta_t);
  return c * hermite_fn_eval(spec.order, x) * std::polar(1.0, point.omega * t);
}

Eigen::ArrayXcd phi_samples(const WindowSpec& spec, const TFPoint& point,
                            const Eigen::Ref<const Eigen::ArrayXd>& t) {
  require_finite(point);
  const Eigen::ArrayXd x = (t - point.time) / (std::numbers::sqrt2 * spec.delta_t);
  const double c = 1.0 / std::sqrt(std::numbers::sqrt2 * spec.delta_t);
  return (c * hermite_fn(spec.order, x)).cast<Complex>() * carrier(t, point.omega);
}

Eigen::ArrayXd phi_abs2_samples(const WindowSpec& spec, double time_mean,
                                const Eigen::Ref<const Eigen::ArrayXd>& t) {
  const Eigen::ArrayXd x = (t - time_mean) / (std::numbers::sqrt2 * spec.delta_t);
  return hermite_fn(spec.order, x).square() / (std::numbers::sqrt2 * spec.delta_t);
}

Complex phi_ft(const WindowSpec& spec, const TFPoint& point, double omega) {
  require_finite(point);
  const double dw = spec.delta_omega();
  const double y = (omega - point.omega) / (std::numbers::sqrt2 * dw);
  const double c = 1.0 / std::sqrt(std::numbers::sqrt2 * dw);
  return kFourierPhase[spec.order % 4] * (c * hermite_fn_eval(spec.order, y)) *
         std::polar(1.0, -point.time * (omega - point.omega));
}

Eigen::ArrayXcd phi_ft_samples(const WindowSpec& spec, const TFPoint& point,
                               const Eigen::Ref<const Eigen::ArrayXd>& omega) {
  require_finite(point);
  const double dw = spec.delta_omega();
  const Eigen::ArrayXd y = (omega - point.omega) / (std::numbers::sqrt2 * dw);
  const double c = 1.0 / std::sqrt(std::numbers::sqrt2 * dw);
  const Eigen::ArrayXd envelope = c * hermite_fn(spec.order, y);
  Eigen::ArrayXcd out(omega.size());
  const Complex phase = kFourierPhase[spec.order % 4];
  for (Eigen::Index j = 0; j < omega.size(); ++j)
    out[j] = phase * envelope[j] * std::polar(1.0, -point.time * (omega[j] - point.omega));
  return out;
}

Complex integral_In(double a, double b, int n) {
  if (n < 0) throw std::invalid_argument("integral_In: degree must be >= 0");
  if (!(a > 0.0) || !(a < 1.0))
    throw std::invalid_argument("integral_In: requires 0 < a < 1");
  const double arg = b / (2.0 * std::sqrt(a * (1.0 - a)));
  const double magnitude = std::sqrt(std::numbers::pi / a) *
                           std::pow((1.0 - a) / a, 0.5 * double(n)) * hermite_eval(n, arg) *
                           std::exp(-b * b / (4.0 * a));
  return kFourierPhase[n % 4] * magnitude;
}

UniformAxis adequate_time_grid(const WindowSpec& spec, const TFPoint& point) {
  const double halfspan = (spec.order_factor() + 8.0) * std::numbers::sqrt2 * spec.delta_t;
  const double step = adequate_time_step(spec, point);
  const auto count = Eigen::Index(std::ceil(2.0 * halfspan / step)) + 1;
  return UniformAxis(point.time - halfspan, step, count);
}

UniformAxis adequate_omega_grid(const WindowSpec& spec, const TFPoint& point) {
  const double dw = spec.delta_omega();
  const double halfspan = (spec.order_factor() + 8.0) * std::numbers::sqrt2 * dw;
  // Conjugate extent of the spectral envelope is the time spread around T.
  const double band = std::abs(point.time) + 2.0 * (spec.order_factor() + 8.0) * spec.delta_t;
  const double step = std::min(dw / 8.0, std::numbers::pi / (4.0 * band));
  const auto count = Eigen::Index(std::ceil(2.0 * halfspan / step)) + 1;
  return UniformAxis(point.omega - halfspan, step, count);
}

bool adequately_sampled(const UniformAxis& grid, const WindowSpec& spec, const TFPoint& point) {
  const double halfspan = (spec.order_factor() + 8.0) * std::numbers::sqrt2 * spec.delta_t;
  return grid.step <= spec.delta_t / 8.0 && grid.start <= point.time - halfspan &&
         grid.back() >= point.time + halfspan;
}

MomentReport window_moments(const WindowSpec& spec, const TFPoint& point, Diagnostics* diag) {
  require_finite(point);
  const UniformAxis tg = adequate_time_grid(spec, point);
  const Eigen::ArrayXd t = tg.values();
  const Eigen::ArrayXd pt = phi_abs2_samples(spec, point.time, t);

  MomentReport report;
  report.energy = pt.sum() * tg.step;
  if (!(report.energy > 0.0)) {
    warn_into(diag, "window_moments: vanishing sampled energy, grid under-resolved");
    return report;
  }
  report.mu_t = (t * pt).sum() * tg.step / report.energy;
  report.sigma_t =
      std::sqrt(std::max(0.0, ((t - report.mu_t).square() * pt).sum() * tg.step / report.energy));

  const UniformAxis wg = adequate_omega_grid(spec, point);
  const Eigen::ArrayXd w = wg.values();
  const Eigen::ArrayXd pw = phi_ft_samples(spec, point, w).abs2();
  const double e_w = pw.sum() * wg.step;
  report.mu_omega = (w * pw).sum() * wg.step / e_w;
  report.sigma_omega =
      std::sqrt(std::max(0.0, ((w - report.mu_omega).square() * pw).sum() * wg.step / e_w));
  report.uncertainty_product = report.sigma_t * report.sigma_omega;

  if (std::abs(report.energy - 1.0) > 1e-6)
    warn_into(diag, "window_moments: sampled energy deviates from 1, sampling under-resolved");
  return report;
}

}  // namespace hgtf
