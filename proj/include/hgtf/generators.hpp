// SPDX-License-Identifier: Apache-2.0
//
// Deterministic closed-form test signals.
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hgtf/hgf.hpp"
#include "hgtf/signal.hpp"

namespace hgtf {

/// Builds a named test signal on the given grid.
///
/// Kinds and parameters (all doubles, defaults in parentheses):
///   gaussian_pulse     sigma (1), center (0), omega (0)
///                      (2pi)^{-1/4} sigma^{-1/2} e^{-(t-c)^2/(4 sigma^2)} e^{i omega t}
///   linear_chirp       rate (required), sigma (1, or span/6 when span given),
///                      span (optional), center (0), omega (0)
///                      Gaussian envelope, phase omega (t-c) + rate (t-c)^2 / 2,
///                      instantaneous frequency omega + rate (t-c)
///                      ("chirp" is accepted as a shorthand)
///   two_tones          omega1, omega2 (required), sigma (4), center (0)
///                      equal-weight carriers under one Gaussian envelope
///   harmonic_gaussian  n (0), delta_t (required), T (0), omega (0)
///   impulse_like       center (0), width (4 * grid step)
///
/// Unknown kinds and unknown or out-of-range parameters are rejected.
Signal generate(std::string_view kind, const std::map<std::string, double>& params,
                const UniformAxis& grid);

}  // namespace hgtf
