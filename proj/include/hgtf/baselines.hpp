// SPDX-License-Identifier: Apache-2.0
//
// Reference distributions for side-by-side comparison: the Wigner-Ville
// distribution (real, marginal-correct, not positive) and the short-time
// Fourier / Gabor transform (positive density, fixed Gaussian window).
#pragma once

#include <functional>

#include <Eigen/Dense>

#include "hgtf/transform.hpp"

namespace hgtf {

/// W(t, w) = (1/2pi) ∫ psi*(t - u/2) psi(t + u/2) e^{-iwu} du, evaluated by
/// lag products on a 2x band-limited-oversampled copy of the signal so the
/// half-shifts land on grid points. The time axis must align with the
/// half-sample grid. The output is real up to roundoff; the discarded
/// imaginary residue (relative to max |W|) is reported through imag_residue.
TFDensity wigner_ville(const Signal& signal, const UniformAxis& time_axis,
                       const UniformAxis& omega_axis, double* imag_residue = nullptr,
                       Diagnostics* diag = nullptr);

using WindowFn = std::function<Complex(double)>;

/// Short-time Fourier transform with an arbitrary window function
///   Psi(T, W) = (1/sqrt(2pi)) ∫ psi(t) g*(t - T) e^{-iWt} dt.
/// The window must satisfy ∫|g|^2 = 1 (checked by quadrature over the offset
/// range the transform actually uses); an unnormalized window is a hard error
/// because the energy identity fails without it.
TFGrid stft(const Signal& signal, const WindowFn& window, const UniformAxis& time_axis,
            const UniformAxis& omega_axis, Diagnostics* diag = nullptr);

/// The fixed Gabor window g(t) = 2^{1/4} e^{-pi t^2} (unit L2 norm).
Complex gabor_window(double t);

/// stft with the Gabor window; identical to the order-0 harmonic Gaussian
/// analysis at delta_t = 1/(2 sqrt(pi)).
TFGrid gabor_transform(const Signal& signal, const UniformAxis& time_axis,
                       const UniformAxis& omega_axis, Diagnostics* diag = nullptr);

/// Band-limited 2x oversampling by spectral zero padding (exposed for tests).
Signal oversample2x(const Signal& signal);

}  // namespace hgtf
