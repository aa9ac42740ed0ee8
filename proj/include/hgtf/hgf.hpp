// SPDX-License-Identifier: Apache-2.0
//
// Harmonic Gaussian functions: the Hermite-windowed Gaussian wave packets
//
//   phi_n(t; T, W, dt) = hn((t-T)/(sqrt(2) dt)) / sqrt(sqrt(2) dt) * e^{iWt}
//
// an orthonormal L2 family with time mean T, frequency mean W, time spread
// sqrt(2n+1) dt and frequency spread sqrt(2n+1) dw, where dt*dw = 1/2. Their
// Fourier transforms have the same shape up to a (-i)^n phase and a T/W swap
// ((-i)^n is the Fourier eigenvalue of hn under the e^{-iwt} convention).
#pragma once

#include <Eigen/Dense>

#include "hgtf/signal.hpp"
#include "hgtf/hermite.hpp"
#include "hgtf/types.hpp"

namespace hgtf {

/// One analysis family: Hermite order n and time width delta_t. The frequency
/// width is always derived (delta_t * delta_omega = 1/2), never stored.
struct WindowSpec {
  int order = 0;
  double delta_t = 1.0;

  WindowSpec() = default;
  WindowSpec(int order_, double delta_t_) : order(order_), delta_t(delta_t_) {
    if (order < 0) throw std::invalid_argument("WindowSpec: order must be >= 0");
    if (!(delta_t > 0.0) || !std::isfinite(delta_t))
      throw std::invalid_argument("WindowSpec: delta_t must be positive and finite");
  }

  double delta_omega() const { return 0.5 / delta_t; }
  double order_factor() const { return std::sqrt(2.0 * double(order) + 1.0); }
  double sigma_t() const { return order_factor() * delta_t; }
  double sigma_omega() const { return order_factor() * delta_omega(); }
};

/// A location in the time-frequency plane: time mean T, frequency mean Omega.
struct TFPoint {
  double time = 0.0;   // T (s)
  double omega = 0.0;  // Omega (rad/s)
};

/// phi_n at a single time.
Complex phi(const WindowSpec& spec, const TFPoint& point, double t);

/// phi_n over an array of times.
Eigen::ArrayXcd phi_samples(const WindowSpec& spec, const TFPoint& point,
                            const Eigen::Ref<const Eigen::ArrayXd>& t);

/// |phi_n|^2 over an array of times (Omega-independent).
Eigen::ArrayXd phi_abs2_samples(const WindowSpec& spec, double time_mean,
                                const Eigen::Ref<const Eigen::ArrayXd>& t);

/// Closed-form Fourier transform of phi_n at a single frequency.
Complex phi_ft(const WindowSpec& spec, const TFPoint& point, double omega);

/// Closed-form transform over an array of frequencies.
Eigen::ArrayXcd phi_ft_samples(const WindowSpec& spec, const TFPoint& point,
                               const Eigen::Ref<const Eigen::ArrayXd>& omega);

/// The Hermite-Gaussian integral
///   I_n(a, b) = ∫ H_n(x) e^{-(a x^2 + i b x)} dx
///             = (-i)^n sqrt(pi/a) ((1-a)/a)^{n/2} H_n(b / (2 sqrt(a(1-a)))) e^{-b^2/(4a)},
/// valid for 0 < a < 1. Mainly a cross-check oracle for phi_ft (a = 1/2 is
/// the case the closed form above rests on). The (-i)^n factor is forced by
/// direct quadrature; generating-function tables that complete the square
/// with e^{+ibx} land on i^n instead.
Complex integral_In(double a, double b, int n);

/// Sampling adequacy rule for a window of order n at parameter delta_t around
/// (T, Omega): step small enough for the Gaussian-Hermite envelope and the
/// carrier, span covering T +/- (sqrt(2n+1)+8) sqrt(2) delta_t.
UniformAxis adequate_time_grid(const WindowSpec& spec, const TFPoint& point);
UniformAxis adequate_omega_grid(const WindowSpec& spec, const TFPoint& point);

/// True when the grid satisfies the adequacy rule for this window at T.
bool adequately_sampled(const UniformAxis& grid, const WindowSpec& spec, const TFPoint& point);

/// Measures E, mu_t, sigma_t from sampled phi_n and mu_omega, sigma_omega
/// from the sampled closed-form transform. Reference values are
/// (1, T, sqrt(2n+1) dt, Omega, sqrt(2n+1) dw).
MomentReport window_moments(const WindowSpec& spec, const TFPoint& point,
                            Diagnostics* diag = nullptr);

}  // namespace hgtf
