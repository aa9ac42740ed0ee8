// SPDX-License-Identifier: Apache-2.0

#include "hgtf/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hgtf {

namespace {
constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("hermite: degree must be >= 0");
}
}  // namespace

double HermiteCoeffs::eval(double x) const {
  // Horner in extended precision: past degree ~30 the summands overwhelm the
  // result by many orders and double accumulation loses the 1e-9 agreement
  // with the recurrence route.
  long double acc = 0.0L;
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k)
    acc = acc * static_cast<long double>(x) + static_cast<long double>(coeffs[k]);
  return static_cast<double>(acc);
}

double hermite_eval(int n, double x) {
  require_degree(n);
  if (n == 0) return 1.0;
  // Extended precision: near the zeros of high-degree H_n the recurrence
  // cancels ~7 digits, and double internals cannot hold the coefficient-table
  // agreement there.
  const long double xl = x;
  long double hm1 = 1.0L;        // H_0
  long double h = 2.0L * xl;     // H_1
  for (int k = 1; k < n; ++k) {
    const long double hp1 = 2.0L * xl * h - 2.0L * static_cast<long double>(k) * hm1;
    hm1 = h;
    h = hp1;
  }
  return static_cast<double>(h);
}

HermiteCoeffs hermite_coeffs(int n) {
  require_degree(n);
  if (n > 64) throw std::invalid_argument("hermite_coeffs: degree above exact-integer range (max 64)");
  Eigen::ArrayXd hm1 = Eigen::ArrayXd::Zero(n + 1);
  Eigen::ArrayXd h = Eigen::ArrayXd::Zero(n + 1);
  hm1[0] = 1.0;
  if (n == 0) return {0, hm1};
  h[1] = 2.0;
  for (int k = 1; k < n; ++k) {
    Eigen::ArrayXd hp1 = Eigen::ArrayXd::Zero(n + 1);
    hp1.segment(1, k + 1) = 2.0 * h.segment(0, k + 1);
    hp1.segment(0, k) -= 2.0 * double(k) * hm1.segment(0, k);
    hm1.swap(h);
    h.swap(hp1);
  }
  return {n, h};
}

double hermite_fn_eval(int n, double x) {
  require_degree(n);
  if (!std::isfinite(x)) throw std::invalid_argument("hermite_fn_eval: x must be finite");
  // Seed h0 = pi^(-1/4) exp(-x^2/2) in (mantissa, binary exponent) form so the
  // Gaussian factor never underflows inside the recurrence.
  const double log2_seed = -0.5 * x * x * std::numbers::log2e;
  const int e_seed = int(std::floor(log2_seed));
  double m_prev = kPiQuarterInv * std::exp2(log2_seed - double(e_seed));
  int e_prev = e_seed;
  if (n == 0) return std::ldexp(m_prev, e_prev);

  double m_cur = std::numbers::sqrt2 * x * m_prev;
  int e_cur = e_prev;
  for (int k = 1; k < n; ++k) {
    // h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}, exponents aligned.
    const double a = x * std::sqrt(2.0 / double(k + 1));
    const double b = std::sqrt(double(k) / double(k + 1));
    double next = a * m_cur - b * std::ldexp(m_prev, e_prev - e_cur);
    m_prev = m_cur;
    e_prev = e_cur;
    if (next != 0.0) {
      int e_adj = 0;
      next = std::frexp(next, &e_adj);
      e_cur += e_adj;
    }
    m_cur = next;
  }
  return std::ldexp(m_cur, e_cur);
}

Eigen::ArrayXd hermite_fn(int n, const Eigen::Ref<const Eigen::ArrayXd>& x) {
  require_degree(n);
  Eigen::ArrayXd hm1 = kPiQuarterInv * (-0.5 * x.square()).exp();
  if (n == 0) return hm1;
  Eigen::ArrayXd h = std::numbers::sqrt2 * x * hm1;
  for (int k = 1; k < n; ++k) {
    const double a = std::sqrt(2.0 / double(k + 1));
    const double b = std::sqrt(double(k) / double(k + 1));
    Eigen::ArrayXd hp1 = a * x * h - b * hm1;
    hm1.swap(h);
    h.swap(hp1);
  }
  return h;
}

Eigen::ArrayXXd hermite_fn_table(int n_max, const Eigen::Ref<const Eigen::ArrayXd>& x) {
  require_degree(n_max);
  Eigen::ArrayXXd table(n_max + 1, x.size());
  table.row(0) = kPiQuarterInv * (-0.5 * x.square().transpose()).exp();
  if (n_max == 0) return table;
  table.row(1) = std::numbers::sqrt2 * x.transpose() * table.row(0);
  for (int k = 1; k < n_max; ++k) {
    const double a = std::sqrt(2.0 / double(k + 1));
    const double b = std::sqrt(double(k) / double(k + 1));
    table.row(k + 1) = a * x.transpose() * table.row(k) - b * table.row(k - 1);
  }
  return table;
}

double hermite_orthogonality_check(int n, int m, int quad_points, double quad_halfwidth) {
  require_degree(n);
  require_degree(m);
  if (quad_points < 2) throw std::invalid_argument("hermite_orthogonality_check: need >= 2 points");
  const double needed = std::sqrt(2.0 * double(std::max(n, m)) + 1.0) + 8.0;
  if (quad_halfwidth < needed)
    throw std::invalid_argument("hermite_orthogonality_check: halfwidth below effective support");
  const double step = 2.0 * quad_halfwidth / double(quad_points);
  if (step > 0.1)
    throw std::invalid_argument("hermite_orthogonality_check: under-resolved quadrature (step > 0.1)");
  // Midpoint rectangle rule over [-hw, hw].
  Eigen::ArrayXd x = Eigen::ArrayXd::LinSpaced(quad_points, -quad_halfwidth + 0.5 * step,
                                               quad_halfwidth - 0.5 * step);
  return (hermite_fn(n, x) * hermite_fn(m, x)).sum() * step;
}

}  // namespace hgtf
