// SPDX-License-Identifier: Apache-2.0
//
// Sampled signals, the continuous-convention Fourier transform pair
//   F(w) = (1/sqrt(2pi)) ∫ f(t) e^{-iwt} dt,   f(t) = (1/sqrt(2pi)) ∫ F(w) e^{iwt} dw,
// approximated by rectangle sums on uniform grids, and the energy/moment
// functionals built on them.
#pragma once

#include <Eigen/Dense>

#include "hgtf/types.hpp"

namespace hgtf {

/// Uniformly sampled complex time series.
struct Signal {
  Eigen::ArrayXcd samples;
  double t0 = 0.0;  // time of first sample (s)
  double dt = 1.0;  // sample step (s)

  Signal() = default;
  Signal(Eigen::ArrayXcd samples_, double t0_, double dt_);

  Eigen::Index size() const { return samples.size(); }
  Eigen::ArrayXd times() const {
    return t0 + dt * Eigen::ArrayXd::LinSpaced(samples.size(), 0.0, double(samples.size() - 1));
  }
  UniformAxis grid() const { return UniformAxis(t0, dt, samples.size()); }

  /// Rectangle-rule energy: sum |psi|^2 dt.
  double energy() const { return samples.abs2().sum() * dt; }
};

/// Uniformly sampled complex frequency series on the centered grid
/// [-pi/dt, pi/dt). Keeps the time origin of the signal it came from so the
/// inverse transform lands on the same grid.
struct Spectrum {
  Eigen::ArrayXcd values;
  double omega0 = 0.0;  // first angular frequency (rad/s)
  double domega = 1.0;  // frequency step (rad/s)
  double t0 = 0.0;      // time-grid anchor for inversion (s)

  Eigen::Index size() const { return values.size(); }
  Eigen::ArrayXd omegas() const {
    return omega0 + domega * Eigen::ArrayXd::LinSpaced(values.size(), 0.0, double(values.size() - 1));
  }
  UniformAxis grid() const { return UniformAxis(omega0, domega, values.size()); }

  double energy() const { return values.abs2().sum() * domega; }
};

struct MomentReport {
  double energy = 0.0;               // signal^2 * s
  double mu_t = 0.0;                 // s
  double sigma_t = 0.0;              // s
  double mu_omega = 0.0;             // rad/s
  double sigma_omega = 0.0;          // rad/s
  double uncertainty_product = 0.0;  // sigma_t * sigma_omega
};

/// Rectangle-rule approximation of the continuous forward transform on the
/// centered frequency grid, computed by FFT with exact t0/omega phase
/// corrections. Endpoint samples above 1e-10 of peak raise a leakage warning.
Spectrum forward_ft(const Signal& signal, Diagnostics* diag = nullptr);

/// Exact discrete inverse of forward_ft (round-trips to ~1e-15).
Signal inverse_ft(const Spectrum& spectrum, Diagnostics* diag = nullptr);

/// Energy, time moments from the sample grid, frequency moments from the
/// forward transform. Throws on zero-energy input.
MomentReport moments(const Signal& signal, Diagnostics* diag = nullptr);

}  // namespace hgtf
