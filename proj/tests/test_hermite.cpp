// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "hgtf/hermite.hpp"

using namespace hgtf;

TEST_CASE("low-degree values") {
  CHECK(hermite_eval(0, 3.7) == 1.0);
  CHECK(hermite_eval(1, 2.0) == 4.0);
  CHECK(hermite_eval(2, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("degree 10 against the coefficient table") {
  const HermiteCoeffs table = hermite_coeffs(10);
  const double via_table = table.eval(0.3);
  CHECK(hermite_eval(10, 0.3) == doctest::Approx(via_table).epsilon(1e-12));
  // hand-expanded H_10 at x = 0.3
  CHECK(via_table == doctest::Approx(-6173.8524877824).epsilon(1e-12));
}

TEST_CASE("coefficient tables") {
  const HermiteCoeffs h0 = hermite_coeffs(0);
  REQUIRE(h0.coeffs.size() == 1);
  CHECK(h0.coeffs[0] == 1.0);

  const HermiteCoeffs h2 = hermite_coeffs(2);
  REQUIRE(h2.coeffs.size() == 3);
  CHECK(h2.coeffs[0] == -2.0);
  CHECK(h2.coeffs[1] == 0.0);
  CHECK(h2.coeffs[2] == 4.0);

  CHECK(hermite_coeffs(6).coeffs[6] == 64.0);

  for (int n : {1, 3, 7, 12, 25, 40, 64}) {
    const HermiteCoeffs table = hermite_coeffs(n);
    CHECK(table.coeffs[n] == std::exp2(double(n)));
    CHECK(table.coeffs[n - 1] == 0.0);
    for (int k = 0; k <= n; ++k)
      if ((n - k) % 2 != 0) CHECK(table.coeffs[k] == 0.0);
  }
}

TEST_CASE("recurrence matches table expansion up to degree 40") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int n = 0; n <= 40; ++n) {
    const HermiteCoeffs table = hermite_coeffs(n);
    for (int trial = 0; trial < 100; ++trial) {
      const double x = u(rng);
      const double want = table.eval(x);
      const double got = hermite_eval(n, x);
      // relative to the expansion's condition sum: within roundoff of a zero
      // of H_n a pointwise-relative comparison only measures cancellation
      double condition = 0.0;
      for (int k = n; k >= 0; --k) condition = condition * std::abs(x) + std::abs(table.coeffs[k]);
      CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, condition));
      if (std::abs(want) > 1e-4 * condition)
        CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
    }
  }
}

TEST_CASE("parity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int n = 0; n <= 20; ++n) {
    const double x = u(rng);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK(hermite_eval(n, -x) == doctest::Approx(sign * hermite_eval(n, x)).epsilon(1e-12));
  }
}

TEST_CASE("generating function") {
  for (double y : {0.1, 0.25}) {
    for (double x : {0.0, 1.0, 2.0}) {
      double series = 0.0;
      double factorial = 1.0;
      for (int n = 0; n <= 30; ++n) {
        if (n > 0) factorial *= double(n);
        series += hermite_eval(n, x) * std::pow(y, n) / factorial;
      }
      CHECK(std::abs(std::exp(2.0 * x * y - y * y) - series) <= 1e-10);
    }
  }
}

TEST_CASE("normalized function values") {
  CHECK(hermite_fn_eval(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(hermite_fn_eval(1, 0.0) == 0.0);
  // compose the raw polynomial with the explicit normalizer at small n
  const double x = 1.25;
  const double want = hermite_eval(3, x) * std::exp(-0.5 * x * x) /
                      std::sqrt(48.0 * std::sqrt(std::numbers::pi));
  CHECK(hermite_fn_eval(3, x) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("array evaluation matches scalar") {
  Eigen::ArrayXd x = Eigen::ArrayXd::LinSpaced(41, -6.0, 6.0);
  for (int n : {0, 1, 2, 5, 9}) {
    const Eigen::ArrayXd values = hermite_fn(n, x);
    const Eigen::ArrayXXd table = hermite_fn_table(9, x);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      CHECK(values[j] == doctest::Approx(hermite_fn_eval(n, x[j])).epsilon(1e-12));
      CHECK(table(n, j) == doctest::Approx(values[j]).epsilon(1e-14));
    }
  }
}

TEST_CASE("gram matrix of h0..h12 is the identity") {
  const double halfwidth = std::sqrt(25.0) + 10.0;
  const int points = 4001;
  for (int n = 0; n <= 12; ++n) {
    for (int m = n; m <= 12; ++m) {
      const double entry = hermite_orthogonality_check(n, m, points, halfwidth);
      const double want = (n == m) ? 1.0 : 0.0;
      CHECK(std::abs(entry - want) <= 1e-8);
    }
  }
}

TEST_CASE("orthogonality check against doubled resolution") {
  CHECK(std::abs(hermite_orthogonality_check(0, 0, 2001, 12.0) - 1.0) <= 1e-10);
  CHECK(std::abs(hermite_orthogonality_check(0, 1, 2001, 12.0)) <= 1e-12);
  const double coarse = hermite_orthogonality_check(7, 7, 2001, 14.0);
  const double fine = hermite_orthogonality_check(7, 7, 4001, 14.0);
  CHECK(std::abs(coarse - 1.0) <= 1e-8);
  CHECK(std::abs(coarse - fine) <= 1e-10);
}

TEST_CASE("stability at high order") {
  for (int n : {100, 500, 2000}) {
    for (double x : {0.0, 1.0, 10.0, 35.0}) {
      const double v = hermite_fn_eval(n, x);
      CHECK(std::isfinite(v));
      CHECK(std::abs(v) < 1.0);
    }
  }
  // scaled recurrence keeps the oscillatory region alive where the plain
  // Gaussian seed would underflow
  CHECK(std::isfinite(hermite_fn_eval(10000, 50.0)));
  CHECK(std::abs(hermite_fn_eval(10000, 50.0)) > 1e-6);
  CHECK(std::abs(hermite_fn_eval(2000, 50.0)) > 1e-6);
}

TEST_CASE("degree and quadrature guards") {
  CHECK_THROWS_AS(hermite_eval(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_coeffs(-2), std::invalid_argument);
  CHECK_THROWS_AS(hermite_coeffs(65), std::invalid_argument);
  CHECK_THROWS_AS(hermite_fn_eval(-1, 0.0), std::invalid_argument);
  // halfwidth below the effective support
  CHECK_THROWS_AS(hermite_orthogonality_check(7, 7, 4001, 5.0), std::invalid_argument);
  // step above 0.1
  CHECK_THROWS_AS(hermite_orthogonality_check(0, 0, 41, 12.0), std::invalid_argument);
}
