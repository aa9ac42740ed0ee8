// SPDX-License-Identifier: Apache-2.0
//
// Recovery of the signal from its time-frequency representation: either the
// basis series at one fixed (T, Omega) point,
//
//   psi(t) = sum_n C_n phi_n(t),   C_n = sqrt(2pi) Psi_n(T, Omega),
//
// or the plane integral of a single-order grid,
//
//   psi(t) = (1/sqrt(2pi)) ∬ Psi_n(T, W) phi_n(t; T, W) dT dW.
#pragma once

#include <Eigen/Dense>

#include "hgtf/transform.hpp"

namespace hgtf {

/// Expansion coefficients C_0..C_n_max of the signal in the harmonic Gaussian
/// basis anchored at (T, Omega) with width delta_t, by direct quadrature.
/// Throws when the sample step cannot resolve order n_max at this carrier.
Eigen::ArrayXcd coefficients_at(const Signal& signal, const TFPoint& point, double delta_t,
                                int n_max, Diagnostics* diag = nullptr);

/// Truncation rule: smallest n with three consecutive coefficients below
/// 1e-8 of the largest (falls back to the full length), capped at 256.
/// Three in a row, so odd/even parity gaps cannot truncate early.
int default_n_max(const Eigen::ArrayXcd& coeffs);

/// Series synthesis psi(t) = sum_n coeffs[n] phi_n(t) on the given grid.
Signal reconstruct_series(const Eigen::ArrayXcd& coeffs, const TFPoint& point, double delta_t,
                          const UniformAxis& grid);

/// Plane-integral synthesis from one psi_n grid, rectangle rule over the
/// grid's own axes, evaluated on the given time grid.
Signal reconstruct_integral(const TFGrid& grid, const UniformAxis& out_grid,
                            Diagnostics* diag = nullptr);

}  // namespace hgtf
