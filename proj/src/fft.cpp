// SPDX-License-Identifier: Apache-2.0

#include "hgtf/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hgtf::fft {

namespace {

bool is_pow2(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::Index next_pow2(Eigen::Index n) {
  Eigen::Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Radix-2 iterative Cooley-Tukey, n a power of two.
void fft_pow2(Eigen::ArrayXcd& a, bool inverse) {
  const Eigen::Index n = a.size();
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const Eigen::Index half = len >> 1;
    const double base = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
    for (Eigen::Index k = 0; k < half; ++k) {
      const Complex w = std::polar(1.0, base * double(k));
      for (Eigen::Index i = k; i < n; i += len) {
        const Complex u = a[i];
        const Complex v = a[i + half] * w;
        a[i] = u + v;
        a[i + half] = u - v;
      }
    }
  }
  if (inverse) a /= double(n);
}

// alpha*k^2/2 reduced mod 2pi in extended precision; k^2 is exact, the
// product is carried in long double so large arguments keep ~1e-12 phase.
double chirp_phase(double alpha, Eigen::Index k) {
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  long double th = static_cast<long double>(alpha) * static_cast<long double>(k) *
                   static_cast<long double>(k) * 0.5L;
  return static_cast<double>(std::remainderl(th, two_pi));
}

}  // namespace

void transform(Eigen::ArrayXcd& data, bool inverse) {
  const Eigen::Index n = data.size();
  if (n == 0) throw std::invalid_argument("fft: empty input");
  if (n == 1) return;
  if (is_pow2(n)) {
    fft_pow2(data, inverse);
    return;
  }
  const double alpha = 2.0 * std::numbers::pi / double(n);
  CztPlan plan(n, n, alpha, inverse ? +1 : -1);
  data = plan.apply(data);
  if (inverse) data /= double(n);
}

Eigen::ArrayXcd forward(Eigen::ArrayXcd data) {
  transform(data, false);
  return data;
}

Eigen::ArrayXcd inverse(Eigen::ArrayXcd data) {
  transform(data, true);
  return data;
}

CztPlan::CztPlan(Eigen::Index in_count, Eigen::Index out_count, double alpha, int sign)
    : in_count_(in_count), out_count_(out_count) {
  if (in_count < 1 || out_count < 1) throw std::invalid_argument("CztPlan: empty geometry");
  if (sign != 1 && sign != -1) throw std::invalid_argument("CztPlan: sign must be +/-1");
  fft_size_ = next_pow2(in_count + out_count - 1);

  chirp_in_.resize(in_count);
  for (Eigen::Index m = 0; m < in_count; ++m)
    chirp_in_[m] = std::polar(1.0, double(sign) * chirp_phase(alpha, m));
  chirp_out_.resize(out_count);
  for (Eigen::Index j = 0; j < out_count; ++j)
    chirp_out_[j] = std::polar(1.0, double(sign) * chirp_phase(alpha, j));

  // Conjugate chirp at offsets j - m in [-(M-1), J-1], negative side wrapped.
  Eigen::ArrayXcd kernel = Eigen::ArrayXcd::Zero(fft_size_);
  for (Eigen::Index k = 0; k < out_count; ++k)
    kernel[k] = std::polar(1.0, -double(sign) * chirp_phase(alpha, k));
  for (Eigen::Index k = 1; k < in_count; ++k)
    kernel[fft_size_ - k] = std::polar(1.0, -double(sign) * chirp_phase(alpha, k));
  fft_pow2(kernel, false);
  kernel_fft_ = std::move(kernel);
}

Eigen::ArrayXcd CztPlan::apply(const Eigen::ArrayXcd& x) const {
  if (x.size() != in_count_) throw std::invalid_argument("CztPlan: input length mismatch");
  Eigen::ArrayXcd work = Eigen::ArrayXcd::Zero(fft_size_);
  work.head(in_count_) = x * chirp_in_;
  fft_pow2(work, false);
  work *= kernel_fft_;
  fft_pow2(work, true);
  return work.head(out_count_) * chirp_out_;
}

ChirpZ::ChirpZ(Eigen::Index in_count, double t_start, double t_step,
               const UniformAxis& out_axis, int sign)
    : plan_(in_count, out_axis.count, out_axis.step * t_step, sign) {
  pre_.resize(in_count);
  for (Eigen::Index m = 0; m < in_count; ++m)
    pre_[m] = std::polar(1.0, double(sign) * out_axis.start * t_step * double(m));
  post_.resize(out_axis.count);
  for (Eigen::Index j = 0; j < out_axis.count; ++j)
    post_[j] = std::polar(1.0, double(sign) * out_axis[j] * t_start);
}

Eigen::ArrayXcd ChirpZ::apply(const Eigen::ArrayXcd& x) const {
  return plan_.apply(x * pre_) * post_;
}

}  // namespace hgtf::fft
