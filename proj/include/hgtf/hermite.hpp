// SPDX-License-Identifier: Apache-2.0
//
// Hermite polynomials H_n and the normalized Hermite functions
// hn(x) = H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)).
//
// Everything downstream evaluates hn rather than H_n: the polynomial and the
// 1/sqrt(2^n n!) normalizer overflow separately long before their product
// does, while hn stays bounded (|hn| < 0.8) for every order.
#pragma once

#include <Eigen/Dense>

namespace hgtf {

/// Expansion H_n(x) = sum_k coeffs[k] x^k. Coefficients are integer-valued
/// doubles built by the three-term recurrence; degree is capped where the
/// values leave the exactly representable integer range.
struct HermiteCoeffs {
  int degree = 0;
  Eigen::ArrayXd coeffs;  // size degree + 1, index = power of x

  double eval(double x) const;  // Horner
};

/// H_n(x) by the upward recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_eval(int n, double x);

/// Coefficient table of H_n, n in [0, 64].
HermiteCoeffs hermite_coeffs(int n);

/// Normalized Hermite function hn(x). Carries a separate binary exponent
/// through the recurrence, so the result is finite and accurate even where
/// the Gaussian seed exp(-x^2/2) underflows (large |x|, large n).
double hermite_fn_eval(int n, double x);

/// hn(x) over an array of arguments, one order. Plain (unscaled) recurrence:
/// arguments deep enough in the Gaussian tail flush to zero, which is the
/// correct limit for every quadrature this backs.
Eigen::ArrayXd hermite_fn(int n, const Eigen::Ref<const Eigen::ArrayXd>& x);

/// Rows 0..n_max of hn(x) over an array of arguments (single sweep).
Eigen::ArrayXXd hermite_fn_table(int n_max, const Eigen::Ref<const Eigen::ArrayXd>& x);

/// Rectangle-rule approximation of the integral of hn*hm over
/// [-halfwidth, halfwidth]; reference value is the Kronecker delta.
/// Requires halfwidth >= sqrt(2 max(n,m) + 1) + 8 and a step <= 0.1.
double hermite_orthogonality_check(int n, int m, int quad_points, double quad_halfwidth);

}  // namespace hgtf
