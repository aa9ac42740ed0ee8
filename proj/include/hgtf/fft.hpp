// SPDX-License-Identifier: Apache-2.0
//
// FFT and chirp-z evaluation on Eigen complex arrays. Power-of-two lengths
// run the iterative radix-2 kernel; every other length goes through the
// Bluestein factorization, so all sizes are O(N log N).
#pragma once

#include <Eigen/Dense>

#include "hgtf/types.hpp"

namespace hgtf::fft {

/// In-place DFT, any length. Forward: X_k = sum_j x_j e^{-2πi jk/N}.
/// Inverse includes the 1/N factor, so inverse(forward(x)) == x.
void transform(Eigen::ArrayXcd& data, bool inverse);

Eigen::ArrayXcd forward(Eigen::ArrayXcd data);
Eigen::ArrayXcd inverse(Eigen::ArrayXcd data);

/// Bluestein plan for the index kernel: out_j = sum_m x_m e^{i·sign·alpha·j·m}.
/// Chirp phases are reduced mod 2π in extended precision, so large j·m stay
/// accurate. Reusable across many inputs of the same length.
class CztPlan {
 public:
  CztPlan(Eigen::Index in_count, Eigen::Index out_count, double alpha, int sign);

  Eigen::ArrayXcd apply(const Eigen::ArrayXcd& x) const;

  Eigen::Index in_count() const { return in_count_; }
  Eigen::Index out_count() const { return out_count_; }

 private:
  Eigen::Index in_count_;
  Eigen::Index out_count_;
  Eigen::Index fft_size_;
  Eigen::ArrayXcd chirp_in_;    // e^{i sign alpha m^2/2}, m < in_count
  Eigen::ArrayXcd chirp_out_;   // e^{i sign alpha j^2/2}, j < out_count
  Eigen::ArrayXcd kernel_fft_;  // FFT of the conjugate chirp, wrapped
};

/// Evaluates S_j = sum_m x_m e^{i·sign·omega_j·t_m} with t_m = t_start + m·t_step
/// and omega_j on a uniform axis — the exact-phase uniform-grid Fourier sum
/// behind every time-frequency slice here. One plan, many slices.
class ChirpZ {
 public:
  ChirpZ(Eigen::Index in_count, double t_start, double t_step,
         const UniformAxis& out_axis, int sign);

  Eigen::ArrayXcd apply(const Eigen::ArrayXcd& x) const;

 private:
  CztPlan plan_;
  Eigen::ArrayXcd pre_;   // e^{i sign omega_start t_m} minus the start-start term
  Eigen::ArrayXcd post_;  // e^{i sign omega_j t_start}
};

}  // namespace hgtf::fft
