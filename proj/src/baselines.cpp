// SPDX-License-Identifier: Apache-2.0

#include "hgtf/baselines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hgtf/fft.hpp"

namespace hgtf {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310002;
constexpr double kGaborAmp = 1.189207115002721;  // 2^(1/4)
}  // namespace

Signal oversample2x(const Signal& signal) {
  const Eigen::Index n = signal.size();
  Eigen::ArrayXcd f = signal.samples;
  fft::transform(f, false);

  // Reinsert bins at their centered frequencies inside a 2n spectrum; for
  // even n the shared Nyquist bin splits in half.
  Eigen::ArrayXcd padded = Eigen::ArrayXcd::Zero(2 * n);
  const Eigen::Index half = (n + 1) / 2;  // positive side size incl. DC
  padded.head(half) = f.head(half);
  padded.tail(n - half) = f.tail(n - half);
  if (n % 2 == 0) {
    // the tail copy put the full Nyquist bin on the negative side
    padded[n + half] = 0.5 * f[half];
    padded[half] = 0.5 * f[half];
  }
  fft::transform(padded, true);
  return Signal(2.0 * padded, signal.t0, signal.dt / 2.0);
}

TFDensity wigner_ville(const Signal& signal, const UniformAxis& time_axis,
                       const UniformAxis& omega_axis, double* imag_residue, Diagnostics* diag) {
  if (!signal.samples.isFinite().all())
    throw std::invalid_argument("wigner_ville: non-finite input");
  const Signal fine = oversample2x(signal);
  const Eigen::Index q = fine.size();
  const double h = fine.dt;  // dt/2

  // Lag u = 2h m', m' in [-(q-1), q-1]; r_{m'}(p) = psi*(p - m') psi(p + m').
  const Eigen::Index lags = 2 * q - 1;
  const double u_start = -double(q - 1) * 2.0 * h;
  const fft::ChirpZ slice(lags, u_start, 2.0 * h, omega_axis, -1);

  TFDensity out;
  out.values.resize(time_axis.count, omega_axis.count);
  out.time_axis = time_axis;
  out.omega_axis = omega_axis;
  out.window.reset();
  out.kind = GridKind::wigner;

  const double scale = 2.0 * h / (2.0 * std::numbers::pi);
  double residue = 0.0;
  double peak = 0.0;
  Eigen::ArrayXcd r(lags);
  for (Eigen::Index i = 0; i < time_axis.count; ++i) {
    const double p_real = (time_axis[i] - fine.t0) / h;
    const auto p = Eigen::Index(std::llround(p_real));
    if (p < 0 || p >= q || std::abs(p_real - double(p)) > 1e-9 * signal.dt)
      throw std::invalid_argument(
          "wigner_ville: time axis must align with the half-sample grid of the signal");
    r.setZero();
    const Eigen::Index reach = std::min(p, q - 1 - p);
    for (Eigen::Index m = -reach; m <= reach; ++m)
      r[m + (q - 1)] = std::conj(fine.samples[p - m]) * fine.samples[p + m];
    const Eigen::ArrayXcd row = scale * slice.apply(r);
    residue = std::max(residue, row.imag().abs().maxCoeff());
    peak = std::max(peak, row.real().abs().maxCoeff());
    out.values.row(i) = row.real().transpose();
  }
  if (imag_residue) *imag_residue = residue;
  if (peak > 0.0 && residue > 1e-10 * peak)
    warn_into(diag, "wigner_ville: imaginary residue above 1e-10 of peak");
  return out;
}

Complex gabor_window(double t) {
  return kGaborAmp * std::exp(-std::numbers::pi * t * t);
}

TFGrid stft(const Signal& signal, const WindowFn& window, const UniformAxis& time_axis,
            const UniformAxis& omega_axis, Diagnostics* diag) {
  (void)diag;
  const Eigen::ArrayXd t = signal.times();

  // Offsets u = t - T the transform touches, padded; the normalization
  // quadrature runs over the same range at the signal resolution.
  const double u_lo = t[0] - time_axis.back() - 8.0;
  const double u_hi = t[t.size() - 1] - time_axis.start + 8.0;
  const auto norm_count = Eigen::Index(std::ceil((u_hi - u_lo) / signal.dt)) + 1;
  double norm = 0.0;
  for (Eigen::Index k = 0; k < norm_count; ++k)
    norm += std::norm(window(u_lo + double(k) * signal.dt));
  norm *= signal.dt;
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument("stft: window is not L2-normalized (integral of |g|^2 != 1)");

  const fft::ChirpZ slice(signal.size(), signal.t0, signal.dt, omega_axis, -1);
  const double scale = signal.dt / kSqrt2Pi;

  TFGrid out;
  out.values.resize(time_axis.count, omega_axis.count);
  out.time_axis = time_axis;
  out.omega_axis = omega_axis;
  out.window.reset();
  out.kind = GridKind::gabor;

  Eigen::ArrayXcd product(t.size());
  for (Eigen::Index i = 0; i < time_axis.count; ++i) {
    for (Eigen::Index j = 0; j < t.size(); ++j)
      product[j] = signal.samples[j] * std::conj(window(t[j] - time_axis[i]));
    out.values.row(i) = (scale * slice.apply(product)).transpose();
  }
  return out;
}

TFGrid gabor_transform(const Signal& signal, const UniformAxis& time_axis,
                       const UniformAxis& omega_axis, Diagnostics* diag) {
  TFGrid out = stft(signal, gabor_window, time_axis, omega_axis, diag);
  // The Gabor window is the order-0 harmonic Gaussian at this width.
  out.window = WindowSpec(0, 0.5 / std::sqrt(std::numbers::pi));
  return out;
}

}  // namespace hgtf
