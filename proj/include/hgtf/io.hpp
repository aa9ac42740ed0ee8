// SPDX-License-Identifier: Apache-2.0
//
// File formats. All numeric text uses shortest round-trip decimals, so
// identical inputs produce byte-identical files.
//
//   signal CSV   header "t,re[,im]", one sample per row, uniform t required
//   signal f64le 16-byte header: magic "HGTF", version u32 LE, 8 reserved
//                zero bytes; then t0, dt as f64 LE, count as u64 LE, then
//                interleaved re/im f64 LE
//   grid CSV     first row "omega\T" then the T values; each following row
//                holds an Omega value then the cells (densities as plain
//                reals, complex grids as re+imj tokens)
//   marginal CSV header "axis,value"
//   PPM          binary P6, one pixel per cell, T rightward, Omega upward,
//                monotone 5-stop colormap, linear or log (clamped at
//                floor * max) scaling
//   report       plain text "key = value" lines
#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "hgtf/signal.hpp"
#include "hgtf/transform.hpp"

namespace hgtf {

std::string format_double(double v);
std::string format_complex(Complex v);  // re+imj token

Signal read_signal_csv(const std::filesystem::path& path);
Signal read_signal_f64le(const std::filesystem::path& path);
Signal read_signal(const std::filesystem::path& path, std::string_view format);

void write_signal_csv(const std::filesystem::path& path, const Signal& signal);
void write_signal_f64le(const std::filesystem::path& path, const Signal& signal);

void write_grid_csv(const std::filesystem::path& path, const TFGrid& grid);
void write_grid_csv(const std::filesystem::path& path, const TFDensity& grid);

/// Re-reads a real-valued grid CSV (self-consistency checks, plotting).
TFDensity read_density_csv(const std::filesystem::path& path);

void write_marginal_csv(const std::filesystem::path& path, const Marginal& marginal);

enum class HeatmapScale { linear, log };

/// P6 heatmap of a real grid. Linear maps [min, max] onto the colormap; log
/// maps |v| with values clamped at floor * max|v|.
void write_heatmap_ppm(const std::filesystem::path& path, const TFDensity& grid,
                       HeatmapScale scale = HeatmapScale::linear, double floor = 1e-6);

/// Ordered key = value report.
struct Report {
  std::vector<std::pair<std::string, std::string>> entries;

  void set(std::string key, double value) { entries.emplace_back(std::move(key), format_double(value)); }
  void set(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
};

void write_report(const std::filesystem::path& path, const Report& report);

}  // namespace hgtf
