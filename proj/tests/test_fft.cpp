// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hgtf/fft.hpp"
#include "test_helpers.hpp"

using namespace hgtf;
using hgtf::testing::dft_direct;
using hgtf::testing::random_complex;

TEST_CASE("matches the direct DFT at assorted sizes") {
  for (Eigen::Index n : {2, 3, 8, 12, 100, 257, 1024}) {
    const Eigen::ArrayXcd x = random_complex(n, unsigned(n));
    const Eigen::ArrayXcd want = dft_direct(x);
    const Eigen::ArrayXcd got = fft::forward(x);
    CHECK(hgtf::testing::rel_l2_error(got, want) <= 1e-12);
  }
}

TEST_CASE("round trip is the identity") {
  for (Eigen::Index n : {2, 16, 384, 1000, 4096}) {
    const Eigen::ArrayXcd x = random_complex(n, 3 * unsigned(n) + 1);
    const Eigen::ArrayXcd back = fft::inverse(fft::forward(x));
    CHECK((back - x).abs().maxCoeff() <= 1e-12 * x.abs().maxCoeff());
  }
}

TEST_CASE("linearity") {
  const Eigen::Index n = 160;
  const Eigen::ArrayXcd x = random_complex(n, 5);
  const Eigen::ArrayXcd y = random_complex(n, 6);
  const Complex a(0.7, -1.3), b(-0.2, 0.4);
  const Eigen::ArrayXcd lhs = fft::forward(a * x + b * y);
  const Eigen::ArrayXcd rhs = a * fft::forward(x) + b * fft::forward(y);
  CHECK((lhs - rhs).abs().maxCoeff() <= 1e-12 * rhs.abs().maxCoeff());
}

TEST_CASE("czt plan reproduces the DFT kernel") {
  const Eigen::Index n = 96;
  const Eigen::ArrayXcd x = random_complex(n, 9);
  const double alpha = 2.0 * std::numbers::pi / double(n);
  fft::CztPlan plan(n, n, alpha, -1);
  const Eigen::ArrayXcd got = plan.apply(x);
  const Eigen::ArrayXcd want = dft_direct(x);
  CHECK(hgtf::testing::rel_l2_error(got, want) <= 1e-12);
}

TEST_CASE("czt at an incommensurate step against the direct sum") {
  const Eigen::Index m = 150, j_count = 37;
  const Eigen::ArrayXcd x = random_complex(m, 10);
  const double alpha = 0.0137;
  for (int sign : {-1, +1}) {
    fft::CztPlan plan(m, j_count, alpha, sign);
    const Eigen::ArrayXcd got = plan.apply(x);
    for (Eigen::Index j = 0; j < j_count; ++j) {
      Complex want = 0.0;
      for (Eigen::Index q = 0; q < m; ++q)
        want += x[q] * std::polar(1.0, double(sign) * alpha * double(j) * double(q));
      CHECK(std::abs(got[j] - want) <= 1e-11 * x.abs().sum());
    }
  }
}

TEST_CASE("chirp-z slice evaluates exact-phase Fourier sums") {
  const Eigen::Index n = 200;
  const double t0 = -3.2, dt = 0.031;
  const Eigen::ArrayXcd x = random_complex(n, 12);
  const UniformAxis axis(-41.0, 0.83, 101);
  fft::ChirpZ slice(n, t0, dt, axis, -1);
  const Eigen::ArrayXcd got = slice.apply(x);
  for (Eigen::Index j = 0; j < axis.count; j += 17) {
    Complex want = 0.0;
    for (Eigen::Index q = 0; q < n; ++q)
      want += x[q] * std::polar(1.0, -axis[j] * (t0 + dt * double(q)));
    CHECK(std::abs(got[j] - want) <= 1e-11 * x.abs().sum());
  }
}

TEST_CASE("rejects empty input") {
  Eigen::ArrayXcd empty;
  CHECK_THROWS_AS(fft::transform(empty, false), std::invalid_argument);
}
