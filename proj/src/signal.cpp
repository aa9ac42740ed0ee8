// SPDX-License-Identifier: Apache-2.0

#include "hgtf/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hgtf/fft.hpp"

namespace hgtf {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310002;  // sqrt(2*pi)

// e^{i sign 2pi p q / n} with exact integer phase reduction.
Complex unit_root(Eigen::Index p, Eigen::Index q, Eigen::Index n, int sign) {
  const Eigen::Index r = (p % n) * (q % n) % n;
  return std::polar(1.0, double(sign) * 2.0 * std::numbers::pi * double(r) / double(n));
}
}  // namespace

Signal::Signal(Eigen::ArrayXcd samples_, double t0_, double dt_)
    : samples(std::move(samples_)), t0(t0_), dt(dt_) {
  if (samples.size() < 2) throw std::invalid_argument("Signal: need at least 2 samples");
  if (!(dt > 0.0)) throw std::invalid_argument("Signal: dt must be > 0");
  if (!samples.isFinite().all()) throw std::invalid_argument("Signal: non-finite sample");
  if (!std::isfinite(t0)) throw std::invalid_argument("Signal: non-finite t0");
}

Spectrum forward_ft(const Signal& signal, Diagnostics* diag) {
  const Eigen::Index n = signal.size();
  const double peak = signal.samples.abs().maxCoeff();
  const double edge = std::max(std::abs(signal.samples[0]), std::abs(signal.samples[n - 1]));
  if (edge > 1e-10 * peak)
    warn_into(diag, "forward_ft: endpoint samples above 1e-10 of peak, truncation leakage likely");

  const Eigen::Index half = n / 2;
  const double domega = 2.0 * std::numbers::pi / (double(n) * signal.dt);
  const double omega0 = -double(half) * domega;

  // psi~(w_k) = dt/sqrt(2pi) e^{-i w_k t0} DFT_k[ psi_j e^{-i w_0 j dt} ];
  // w_0 j dt = -2pi (half j)/n, so the pre-phase reduces exactly.
  Eigen::ArrayXcd work(n);
  for (Eigen::Index j = 0; j < n; ++j)
    work[j] = signal.samples[j] * unit_root(half, j, n, +1);
  fft::transform(work, false);

  Spectrum out;
  out.values.resize(n);
  const double scale = signal.dt / kSqrt2Pi;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double omega_k = omega0 + domega * double(k);
    out.values[k] = scale * std::polar(1.0, -omega_k * signal.t0) * work[k];
  }
  out.omega0 = omega0;
  out.domega = domega;
  out.t0 = signal.t0;
  return out;
}

Signal inverse_ft(const Spectrum& spectrum, Diagnostics*) {
  const Eigen::Index n = spectrum.size();
  if (n < 2) throw std::invalid_argument("inverse_ft: need at least 2 values");
  if (!spectrum.values.isFinite().all())
    throw std::invalid_argument("inverse_ft: non-finite value");

  const double dt = 2.0 * std::numbers::pi / (double(n) * spectrum.domega);
  const Eigen::Index half = n / 2;

  Eigen::ArrayXcd work(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double omega_k = spectrum.omega0 + spectrum.domega * double(k);
    work[k] = spectrum.values[k] * std::polar(1.0, omega_k * spectrum.t0) * kSqrt2Pi / dt;
  }
  fft::transform(work, true);

  Eigen::ArrayXcd samples(n);
  for (Eigen::Index j = 0; j < n; ++j)
    samples[j] = work[j] * unit_root(half, j, n, -1);
  return Signal(std::move(samples), spectrum.t0, dt);
}

MomentReport moments(const Signal& signal, Diagnostics* diag) {
  const double energy = signal.energy();
  if (!(energy > 0.0)) throw std::invalid_argument("moments: zero-energy signal");

  const Eigen::ArrayXd t = signal.times();
  const Eigen::ArrayXd p = signal.samples.abs2();
  const double mu_t = (t * p).sum() * signal.dt / energy;
  const double var_t = ((t - mu_t).square() * p).sum() * signal.dt / energy;

  const Spectrum spec = forward_ft(signal, diag);
  const Eigen::ArrayXd w = spec.omegas();
  const Eigen::ArrayXd q = spec.values.abs2();
  const double e_omega = q.sum() * spec.domega;
  const double mu_w = (w * q).sum() * spec.domega / e_omega;
  const double var_w = ((w - mu_w).square() * q).sum() * spec.domega / e_omega;

  MomentReport report;
  report.energy = energy;
  report.mu_t = mu_t;
  report.sigma_t = std::sqrt(std::max(0.0, var_t));
  report.mu_omega = mu_w;
  report.sigma_omega = std::sqrt(std::max(0.0, var_w));
  report.uncertainty_product = report.sigma_t * report.sigma_omega;
  return report;
}

}  // namespace hgtf
