// SPDX-License-Identifier: Apache-2.0

#include "hgtf/generators.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace hgtf {

namespace {

constexpr double kGaussAmp = 0.6316187777460647;  // (2*pi)^(-1/4)

class Params {
 public:
  Params(const std::map<std::string, double>& params, std::set<std::string> allowed)
      : params_(params) {
    for (const auto& [key, value] : params_) {
      if (!allowed.count(key))
        throw std::invalid_argument("generate: unknown parameter '" + key + "'");
      if (!std::isfinite(value))
        throw std::invalid_argument("generate: non-finite parameter '" + key + "'");
    }
  }

  double get(const std::string& key, double fallback) const {
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  double require(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end())
      throw std::invalid_argument("generate: missing required parameter '" + key + "'");
    return it->second;
  }

  bool has(const std::string& key) const { return params_.count(key) != 0; }

 private:
  const std::map<std::string, double>& params_;
};

double positive(const Params& p, const std::string& key, double fallback) {
  const double v = p.get(key, fallback);
  if (!(v > 0.0)) throw std::invalid_argument("generate: parameter '" + key + "' must be > 0");
  return v;
}

Eigen::ArrayXcd gaussian_packet(const Eigen::ArrayXd& t, double sigma, double center,
                                double omega, double rate) {
  const double amp = kGaussAmp / std::sqrt(sigma);
  const Eigen::ArrayXd u = t - center;
  const Eigen::ArrayXd envelope = amp * (-u.square() / (4.0 * sigma * sigma)).exp();
  Eigen::ArrayXcd out(t.size());
  for (Eigen::Index j = 0; j < t.size(); ++j)
    out[j] = envelope[j] * std::polar(1.0, omega * u[j] + 0.5 * rate * u[j] * u[j]);
  return out;
}

}  // namespace

Signal generate(std::string_view kind, const std::map<std::string, double>& params,
                const UniformAxis& grid) {
  const Eigen::ArrayXd t = grid.values();

  if (kind == "gaussian_pulse") {
    Params p(params, {"sigma", "center", "omega"});
    const double sigma = positive(p, "sigma", 1.0);
    const double center = p.get("center", 0.0);
    const double omega = p.get("omega", 0.0);
    // carrier phase referenced to t (not t - center) so the t = 0 sample is real
    Eigen::ArrayXcd s = gaussian_packet(t, sigma, center, 0.0, 0.0);
    for (Eigen::Index j = 0; j < t.size(); ++j) s[j] *= std::polar(1.0, omega * t[j]);
    return Signal(std::move(s), grid.start, grid.step);
  }

  if (kind == "linear_chirp" || kind == "chirp") {
    Params p(params, {"rate", "sigma", "span", "center", "omega"});
    const double rate = p.require("rate");
    const double sigma = positive(p, "sigma", p.has("span") ? positive(p, "span", 6.0) / 6.0 : 1.0);
    return Signal(gaussian_packet(t, sigma, p.get("center", 0.0), p.get("omega", 0.0), rate),
                  grid.start, grid.step);
  }

  if (kind == "two_tones") {
    Params p(params, {"omega1", "omega2", "sigma", "center"});
    const double w1 = p.require("omega1");
    const double w2 = p.require("omega2");
    const double sigma = positive(p, "sigma", 4.0);
    const double center = p.get("center", 0.0);
    const double amp = kGaussAmp / std::sqrt(2.0 * sigma);
    const Eigen::ArrayXd u = t - center;
    const Eigen::ArrayXd envelope = amp * (-u.square() / (4.0 * sigma * sigma)).exp();
    Eigen::ArrayXcd s(t.size());
    for (Eigen::Index j = 0; j < t.size(); ++j)
      s[j] = envelope[j] * (std::polar(1.0, w1 * t[j]) + std::polar(1.0, w2 * t[j]));
    return Signal(std::move(s), grid.start, grid.step);
  }

  if (kind == "harmonic_gaussian") {
    Params p(params, {"n", "delta_t", "T", "omega"});
    const double n_raw = p.get("n", 0.0);
    const int n = int(n_raw);
    if (double(n) != n_raw || n < 0)
      throw std::invalid_argument("generate: parameter 'n' must be a nonnegative integer");
    const double delta_t = p.require("delta_t");
    if (!(delta_t > 0.0)) throw std::invalid_argument("generate: parameter 'delta_t' must be > 0");
    const WindowSpec spec(n, delta_t);
    const TFPoint point{p.get("T", 0.0), p.get("omega", 0.0)};
    return Signal(phi_samples(spec, point, t), grid.start, grid.step);
  }

  if (kind == "impulse_like") {
    Params p(params, {"center", "width"});
    const double width = positive(p, "width", 4.0 * grid.step);
    return Signal(gaussian_packet(t, width, p.get("center", 0.0), 0.0, 0.0), grid.start,
                  grid.step);
  }

  throw std::invalid_argument("generate: unknown kind '" + std::string(kind) + "'");
}

}  // namespace hgtf
