// SPDX-License-Identifier: Apache-2.0
//
// Order-n time-frequency analysis: the linear maps taking a signal to
//
//   Psi_n(T, W) = (1/sqrt(2pi)) ∫ phi_n*(t; T, W, dt) psi(t) dt,
//
// their energy densities |Psi_n|^2, the two marginals, and the
// energy-conservation functionals. The grid path evaluates each T slice with
// one chirp-z transform of the Hermite-windowed product; the direct
// single-point quadrature is kept as the definitional route.
#pragma once

#include <optional>

#include <Eigen/Dense>

#include "hgtf/hgf.hpp"
#include "hgtf/signal.hpp"

namespace hgtf {

enum class GridKind { psi_n, energy_density, wigner, gabor };

template <typename Scalar>
struct TFGridT {
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Values values;  // row = T index, column = Omega index
  UniformAxis time_axis;
  UniformAxis omega_axis;
  std::optional<WindowSpec> window;  // absent for Wigner-Ville grids
  GridKind kind = GridKind::psi_n;
};

using TFGrid = TFGridT<Complex>;    // psi_n, gabor
using TFDensity = TFGridT<double>;  // energy_density, wigner

struct Marginal {
  enum class Which { time, frequency };

  UniformAxis axis;  // T (s) or Omega (rad/s)
  Eigen::ArrayXd values;
  WindowSpec window;
  Which which = Which::time;

  double integral() const { return values.sum() * axis.step; }
};

/// Time-domain route: one chirp-z per T slice, exact phases on the Omega axis.
TFGrid analyze(const Signal& signal, const WindowSpec& spec, const UniformAxis& time_axis,
               const UniformAxis& omega_axis, Diagnostics* diag = nullptr);

/// Frequency-domain route through the closed-form window transform and the
/// signal spectrum; agrees with analyze to quadrature accuracy.
TFGrid analyze_freq(const Signal& signal, const WindowSpec& spec, const UniformAxis& time_axis,
                    const UniformAxis& omega_axis, Diagnostics* diag = nullptr);

/// Direct quadrature of the defining integral at one (T, Omega) point.
Complex analyze_point(const Signal& signal, const WindowSpec& spec, const TFPoint& point);

/// Entrywise |Psi_n|^2 of a psi_n (or gabor) grid.
TFDensity energy_density(const TFGrid& grid);

/// Instantaneous-power marginal p_n(T) by its own 1D quadrature against
/// |psi(t)|^2 (not by integrating the 2D grid).
Marginal marginal_time(const Signal& signal, const WindowSpec& spec,
                       const UniformAxis& time_axis);

/// Spectral-energy marginal rho_n(Omega) against |psi~(omega)|^2.
Marginal marginal_freq(const Signal& signal, const WindowSpec& spec,
                       const UniformAxis& omega_axis);

/// Rectangle-rule plane integral of |Psi_n|^2; equals the signal energy on a
/// covering grid. Boundary density above 1e-8 of peak raises a coverage
/// warning.
double energy_of_grid(const TFGrid& grid, Diagnostics* diag = nullptr);

/// Signal time grid decimated to at most max_points.
UniformAxis default_time_axis(const Signal& signal, Eigen::Index max_points = 512);

/// Centered frequency grid of the signal decimated to at most max_points.
UniformAxis default_omega_axis(const Signal& signal, Eigen::Index max_points = 512);

}  // namespace hgtf
