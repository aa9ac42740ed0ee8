// SPDX-License-Identifier: Apache-2.0

#include "hgtf/reconstruct.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hgtf/fft.hpp"

namespace hgtf {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310002;
}

Eigen::ArrayXcd coefficients_at(const Signal& signal, const TFPoint& point, double delta_t,
                                int n_max, Diagnostics* diag) {
  if (n_max < 0) throw std::invalid_argument("coefficients_at: n_max must be >= 0");
  const WindowSpec top(n_max, delta_t);
  // Aliasing bound: the order-n_max window centered at Omega must fit under
  // the signal's Nyquist frequency.
  const double nyquist = std::numbers::pi / signal.dt;
  if (std::abs(point.omega) + (top.order_factor() + 8.0) * top.delta_omega() > nyquist)
    throw std::invalid_argument(
        "coefficients_at: sample step cannot resolve this order at this carrier");

  const Eigen::ArrayXd t = signal.times();
  const double root = std::numbers::sqrt2 * delta_t;
  const Eigen::ArrayXd x = (t - point.time) / root;
  const double c = 1.0 / std::sqrt(root);

  Eigen::ArrayXcd weighted(t.size());
  for (Eigen::Index j = 0; j < t.size(); ++j)
    weighted[j] = signal.samples[j] * std::polar(1.0, -point.omega * t[j]) * (c * signal.dt);

  const double span = (top.order_factor() + 8.0) * root;
  if (signal.t0 > point.time - span || signal.times()[t.size() - 1] < point.time + span)
    warn_into(diag, "coefficients_at: signal grid narrower than the order-n_max window support");

  // Single sweep: roll the hn recurrence across orders, accumulating each C_n.
  Eigen::ArrayXcd coeffs(n_max + 1);
  Eigen::ArrayXd hm1 = 0.7511255444649425 * (-0.5 * x.square()).exp();  // h0
  coeffs[0] = (hm1 * weighted).sum();
  if (n_max >= 1) {
    Eigen::ArrayXd h = std::numbers::sqrt2 * x * hm1;
    coeffs[1] = (h * weighted).sum();
    for (int k = 1; k < n_max; ++k) {
      const double a = std::sqrt(2.0 / double(k + 1));
      const double b = std::sqrt(double(k) / double(k + 1));
      Eigen::ArrayXd hp1 = a * x * h - b * hm1;
      hm1.swap(h);
      h.swap(hp1);
      coeffs[k + 1] = (h * weighted).sum();
    }
  }
  return coeffs;
}

int default_n_max(const Eigen::ArrayXcd& coeffs) {
  const Eigen::Index n = coeffs.size();
  const double floor = 1e-8 * coeffs.abs().maxCoeff();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    if (std::abs(coeffs[k]) < floor && std::abs(coeffs[k + 1]) < floor &&
        std::abs(coeffs[k + 2]) < floor)
      return int(std::min<Eigen::Index>(k, 256));
  }
  return int(std::min<Eigen::Index>(n - 1, 256));
}

Signal reconstruct_series(const Eigen::ArrayXcd& coeffs, const TFPoint& point, double delta_t,
                          const UniformAxis& grid) {
  if (coeffs.size() == 0) throw std::invalid_argument("reconstruct_series: empty coefficients");
  if (!(delta_t > 0.0)) throw std::invalid_argument("reconstruct_series: delta_t must be > 0");
  const Eigen::ArrayXd t = grid.values();
  const double root = std::numbers::sqrt2 * delta_t;
  const Eigen::ArrayXd x = (t - point.time) / root;
  const double c = 1.0 / std::sqrt(root);
  const int n_max = int(coeffs.size()) - 1;

  Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(t.size());
  Eigen::ArrayXd hm1 = 0.7511255444649425 * (-0.5 * x.square()).exp();
  acc += coeffs[0] * hm1.cast<Complex>();
  if (n_max >= 1) {
    Eigen::ArrayXd h = std::numbers::sqrt2 * x * hm1;
    acc += coeffs[1] * h.cast<Complex>();
    for (int k = 1; k < n_max; ++k) {
      const double a = std::sqrt(2.0 / double(k + 1));
      const double b = std::sqrt(double(k) / double(k + 1));
      Eigen::ArrayXd hp1 = a * x * h - b * hm1;
      hm1.swap(h);
      h.swap(hp1);
      acc += coeffs[k + 1] * h.cast<Complex>();
    }
  }
  for (Eigen::Index j = 0; j < t.size(); ++j)
    acc[j] *= c * std::polar(1.0, point.omega * t[j]);
  return Signal(std::move(acc), grid.start, grid.step);
}

Signal reconstruct_integral(const TFGrid& grid, const UniformAxis& out_grid, Diagnostics* diag) {
  if (grid.kind != GridKind::psi_n && grid.kind != GridKind::gabor)
    throw std::invalid_argument("reconstruct_integral: grid kind must be psi_n or gabor");
  if (!grid.window)
    throw std::invalid_argument("reconstruct_integral: grid carries no window spec");
  energy_of_grid(grid, diag);  // coverage diagnostic

  const WindowSpec spec = *grid.window;
  const double root = std::numbers::sqrt2 * spec.delta_t;
  const double c = 1.0 / std::sqrt(root);
  const double scale = c * grid.time_axis.step * grid.omega_axis.step / kSqrt2Pi;
  const Eigen::ArrayXd t = out_grid.values();

  // psi(t) = scale * sum_i hn((t - T_i)/root) * sum_j Psi_ij e^{i W_j t};
  // the inner sum is one chirp-z per T slice.
  const fft::ChirpZ slice(grid.omega_axis.count, grid.omega_axis.start, grid.omega_axis.step,
                          out_grid, +1);
  Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(t.size());
  for (Eigen::Index i = 0; i < grid.time_axis.count; ++i) {
    const Eigen::ArrayXd envelope = hermite_fn(spec.order, (t - grid.time_axis[i]) / root);
    acc += envelope * slice.apply(grid.values.row(i).transpose());
  }
  return Signal(scale * acc, out_grid.start, out_grid.step);
}

}  // namespace hgtf
