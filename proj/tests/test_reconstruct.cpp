// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hgtf/generators.hpp"
#include "hgtf/reconstruct.hpp"
#include "test_helpers.hpp"

using namespace hgtf;
using hgtf::testing::rel_l2_error;

namespace {
const UniformAxis kGrid(-20.0, 0.02, 2001);
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("a basis element has a single unit coefficient") {
  const double delta_t = 0.9;
  const TFPoint point{0.4, 1.1};
  const Signal s(phi_samples(WindowSpec(0, delta_t), point, kGrid.values()), kGrid.start,
                 kGrid.step);
  const Eigen::ArrayXcd coeffs = coefficients_at(s, point, delta_t, 12);
  CHECK(std::abs(coeffs[0] - 1.0) <= 1e-8);
  for (Eigen::Index k = 1; k < coeffs.size(); ++k) CHECK(std::abs(coeffs[k]) <= 1e-8);
}

TEST_CASE("coefficient energies converge to the signal energy") {
  const Signal s = generate("linear_chirp", {{"rate", 1.0}, {"sigma", 1.2}}, kGrid);
  const MomentReport m = moments(s);
  const TFPoint center{m.mu_t, m.mu_omega};
  const Eigen::ArrayXcd coeffs = coefficients_at(s, center, 0.7, 96);

  // Bessel: every truncation stays below E, and the tail closes the gap
  const double e = s.energy();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    acc += std::norm(coeffs[k]);
    CHECK(acc <= e + 1e-9);
  }
  CHECK(acc == doctest::Approx(e).epsilon(1e-4));

  // decay past the occupied orders, recorded once observed
  CHECK(std::abs(coeffs[90]) <= 1e-6);
  CHECK(std::abs(coeffs[95]) <= 1e-6);
}

TEST_CASE("coefficients match analyze grid values across sqrt(2pi)") {
  const Signal s = generate("gaussian_pulse", {{"sigma", 1.2}, {"omega", 0.8}}, kGrid);
  const TFPoint point{0.5, 1.0};
  const double delta_t = 0.8;
  const Eigen::ArrayXcd coeffs = coefficients_at(s, point, delta_t, 5);
  for (int n = 0; n <= 5; ++n) {
    const Complex psi = analyze_point(s, WindowSpec(n, delta_t), point);
    CHECK(std::abs(coeffs[n] - std::sqrt(kTwoPi) * psi) <= 1e-9);
  }
}

TEST_CASE("series reconstruction of a single coefficient is phi itself") {
  const TFPoint point{-0.3, 0.7};
  Eigen::ArrayXcd coeffs = Eigen::ArrayXcd::Zero(3);
  coeffs[0] = 1.0;
  const Signal got = reconstruct_series(coeffs, point, 0.75, kGrid);
  const Eigen::ArrayXcd want = phi_samples(WindowSpec(0, 0.75), point, kGrid.values());
  CHECK((got.samples - want).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("series error decreases monotonically and hits 1e-3 by n_max 64") {
  // phase-space shear rate*sigma^2 sets the Hermite occupation; this pairing
  // needs ~order 41, inside the n_max = 64 budget
  const Signal s = generate("linear_chirp", {{"rate", 1.0}, {"sigma", 1.2}}, kGrid);
  const MomentReport m = moments(s);
  const TFPoint center{m.mu_t, m.mu_omega};
  const Eigen::ArrayXcd coeffs = coefficients_at(s, center, 0.7, 64);

  double last = std::numeric_limits<double>::infinity();
  for (int n_max : {0, 4, 8, 16, 32, 64}) {
    const Signal rec = reconstruct_series(coeffs.head(n_max + 1), center, 0.7, kGrid);
    const double err = rel_l2_error(rec.samples, s.samples);
    CHECK(err <= last + 1e-12);
    last = err;
  }
  CHECK(last <= 1e-3);
}

TEST_CASE("two-tone truncation error shrinks with order") {
  const Signal s = generate("two_tones", {{"omega1", 2.0}, {"omega2", 6.0}, {"sigma", 2.0}}, kGrid);
  const MomentReport m = moments(s);
  const TFPoint center{m.mu_t, m.mu_omega};
  const Eigen::ArrayXcd coeffs = coefficients_at(s, center, 1.0, 32);
  const double err0 =
      rel_l2_error(reconstruct_series(coeffs.head(1), center, 1.0, kGrid).samples, s.samples);
  const double err32 = rel_l2_error(reconstruct_series(coeffs, center, 1.0, kGrid).samples,
                                    s.samples);
  CHECK(err32 < err0);
}

TEST_CASE("default truncation rule skips parity gaps") {
  // even signal at an even-symmetric point: odd coefficients vanish
  const Signal s = generate("gaussian_pulse", {{"sigma", 1.5}}, kGrid);
  const Eigen::ArrayXcd coeffs = coefficients_at(s, TFPoint{0.0, 0.0}, 1.0, 48);
  const int n_stop = default_n_max(coeffs);
  CHECK(n_stop >= 2);  // odd-coefficient zeros alone must not trigger the rule
  // the retained head reconstructs essentially exactly
  const Signal rec = reconstruct_series(coeffs.head(n_stop + 1), TFPoint{0.0, 0.0}, 1.0, kGrid);
  CHECK(rel_l2_error(rec.samples, s.samples) <= 1e-6);
}

TEST_CASE("integral route round-trips a basis element") {
  const UniformAxis grid(-12.0, 0.02, 1201);
  const Signal s(phi_samples(WindowSpec(0, 1.0), TFPoint{0.0, 0.5}, grid.values()), grid.start,
                 grid.step);
  const UniformAxis t_axis(-9.0, 0.140625, 129);
  const UniformAxis w_axis(-8.5 + 0.5, 0.0625, 257);
  const TFGrid psi = analyze(s, WindowSpec(0, 1.0), t_axis, w_axis);
  const Signal rec = reconstruct_integral(psi, grid);
  CHECK(rel_l2_error(rec.samples, s.samples) <= 1e-4);
}

TEST_CASE("integral route works at any fixed order") {
  const UniformAxis grid(-16.0, 0.02, 1601);
  const Signal s = generate("linear_chirp", {{"rate", 1.0}, {"sigma", 2.0}}, grid);
  const UniformAxis t_axis(-13.0, 0.203125, 129);
  const UniformAxis w_axis(-12.0, 0.09375, 257);
  for (int n : {0, 3}) {
    const TFGrid psi = analyze(s, WindowSpec(n, 0.8), t_axis, w_axis);
    const Signal rec = reconstruct_integral(psi, grid);
    CHECK(rel_l2_error(rec.samples, s.samples) <= 1e-3);
  }
}

TEST_CASE("integral route is linear in the grid") {
  const UniformAxis grid(-10.0, 0.025, 801);
  const Signal s = generate("gaussian_pulse", {{"sigma", 1.0}}, grid);
  const UniformAxis axis(-7.0, 0.109375, 129);
  TFGrid psi = analyze(s, WindowSpec(1, 0.9), axis, axis);
  const Signal base = reconstruct_integral(psi, grid);
  const Complex lambda(0.4, -1.7);
  psi.values *= lambda;
  const Signal scaled = reconstruct_integral(psi, grid);
  CHECK((scaled.samples - lambda * base.samples).abs().maxCoeff() <=
        1e-12 * base.samples.abs().maxCoeff());
}

TEST_CASE("zero grid reconstructs the zero signal") {
  TFGrid psi;
  psi.values = Eigen::ArrayXXcd::Zero(17, 19);
  psi.time_axis = UniformAxis(-2.0, 0.25, 17);
  psi.omega_axis = UniformAxis(-3.0, 0.3, 19);
  psi.window = WindowSpec(2, 0.5);
  psi.kind = GridKind::psi_n;
  const Signal rec = reconstruct_integral(psi, UniformAxis(-4.0, 0.1, 81));
  CHECK(rec.samples.abs().maxCoeff() == 0.0);
}

TEST_CASE("guards") {
  const Signal s = generate("gaussian_pulse", {{"sigma", 1.0}}, UniformAxis(-8.0, 0.25, 65));
  // order too high for this sample step at this carrier
  CHECK_THROWS_AS(coefficients_at(s, TFPoint{0.0, 0.0}, 1.0, 400), std::invalid_argument);
  CHECK_THROWS_AS(coefficients_at(s, TFPoint{0.0, 0.0}, 1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_series(Eigen::ArrayXcd(), TFPoint{}, 1.0, kGrid),
                  std::invalid_argument);
  TFGrid no_window;
  no_window.values = Eigen::ArrayXXcd::Zero(4, 4);
  no_window.time_axis = UniformAxis(0.0, 1.0, 4);
  no_window.omega_axis = UniformAxis(0.0, 1.0, 4);
  no_window.window.reset();
  CHECK_THROWS_AS(reconstruct_integral(no_window, kGrid), std::invalid_argument);
}
