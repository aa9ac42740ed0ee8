// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgtf {

using Complex = std::complex<double>;

/// Strictly increasing uniform grid (start + step * index).
struct UniformAxis {
  double start = 0.0;
  double step = 1.0;
  Eigen::Index count = 0;

  UniformAxis() = default;
  UniformAxis(double start_, double step_, Eigen::Index count_)
      : start(start_), step(step_), count(count_) {
    if (count < 2) throw std::invalid_argument("UniformAxis: need at least 2 points");
    if (!(step > 0.0)) throw std::invalid_argument("UniformAxis: step must be > 0");
  }

  static UniformAxis spanning(double lo, double hi, Eigen::Index count) {
    if (count < 2) throw std::invalid_argument("UniformAxis: need at least 2 points");
    if (!(hi > lo)) throw std::invalid_argument("UniformAxis: max must exceed min");
    return UniformAxis(lo, (hi - lo) / double(count - 1), count);
  }

  double operator[](Eigen::Index i) const { return start + step * double(i); }
  double back() const { return (*this)[count - 1]; }

  Eigen::ArrayXd values() const {
    return start + step * Eigen::ArrayXd::LinSpaced(count, 0.0, double(count - 1));
  }
};

/// Collector for non-fatal numerical warnings (leakage, coverage, resolution).
/// Operations accept an optional pointer; a null collector drops the notes.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
  bool empty() const { return warnings.empty(); }
};

inline void warn_into(Diagnostics* diag, std::string msg) {
  if (diag) diag->warn(std::move(msg));
}

}  // namespace hgtf
