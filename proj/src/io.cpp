// SPDX-License-Identifier: Apache-2.0

#include "hgtf/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hgtf {

namespace {

constexpr char kMagic[4] = {'H', 'G', 'T', 'F'};
constexpr std::uint32_t kVersion = 1;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return in;
}

double parse_double(std::string_view token, const std::filesystem::path& path, int row) {
  double v = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end)
    fail(path, "malformed number '" + std::string(token) + "' at row " + std::to_string(row));
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    const size_t next = line.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

void put_u32(std::ofstream& out, std::uint32_t v) {
  std::array<unsigned char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b.data()), 4);
}

void put_u64(std::ofstream& out, std::uint64_t v) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

void put_f64(std::ofstream& out, double v) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}

std::uint32_t get_u32(std::ifstream& in, const std::filesystem::path& path) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) fail(path, "truncated header");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::ifstream& in, const std::filesystem::path& path) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 8)) fail(path, "truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

double get_f64(std::ifstream& in, const std::filesystem::path& path) {
  const std::uint64_t bits = get_u64(in, path);
  double v = 0.0;
  std::memcpy(&v, &bits, 8);
  return v;
}

UniformAxis axis_from_values(const std::vector<double>& v, const std::filesystem::path& path,
                             const char* what) {
  if (v.size() < 2) fail(path, std::string(what) + ": need at least 2 values");
  const double step = v[1] - v[0];
  if (!(step > 0.0)) fail(path, std::string(what) + ": not increasing");
  for (size_t k = 2; k < v.size(); ++k) {
    const double expect = v[0] + step * double(k);
    if (std::abs(v[k] - expect) > 1e-9 * std::max(std::abs(expect), step))
      fail(path, std::string(what) + ": non-uniform at index " + std::to_string(k));
  }
  return UniformAxis(v[0], step, Eigen::Index(v.size()));
}

// 5-stop monotone colormap, dark to bright.
std::array<unsigned char, 3> colormap(double t) {
  static constexpr double stops[5][3] = {{0, 0, 4},
                                         {64, 18, 103},
                                         {176, 53, 113},
                                         {247, 126, 37},
                                         {252, 254, 164}};
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * 4.0;
  const int lo = std::min(3, int(pos));
  const double frac = pos - double(lo);
  std::array<unsigned char, 3> rgb{};
  for (int c = 0; c < 3; ++c) {
    const double v = stops[lo][c] + frac * (stops[lo + 1][c] - stops[lo][c]);
    rgb[c] = static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 255.0)));
  }
  return rgb;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), ptr);
}

std::string format_complex(Complex v) {
  const double im = v.imag();
  if (std::signbit(im))
    return format_double(v.real()) + "-" + format_double(-im) + "j";
  return format_double(v.real()) + "+" + format_double(im) + "j";
}

Signal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path, false);
  std::string line;
  if (!std::getline(in, line)) fail(path, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool has_imag = false;
  if (line == "t,re")
    has_imag = false;
  else if (line == "t,re,im")
    has_imag = true;
  else
    fail(path, "malformed header (expected 't,re' or 't,re,im')");

  std::vector<double> t;
  std::vector<Complex> samples;
  int row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    const auto fields = split(line, ',');
    if (fields.size() != size_t(has_imag ? 3 : 2))
      fail(path, "wrong column count at row " + std::to_string(row));
    t.push_back(parse_double(fields[0], path, row));
    const double re = parse_double(fields[1], path, row);
    const double im = has_imag ? parse_double(fields[2], path, row) : 0.0;
    if (!std::isfinite(re) || !std::isfinite(im))
      fail(path, "non-finite sample at row " + std::to_string(row));
    samples.emplace_back(re, im);
  }
  if (t.size() < 2) fail(path, "need at least 2 samples");

  const double t0 = t[0];
  const double dt = t[1] - t[0];
  if (!(dt > 0.0)) fail(path, "time column not increasing at row 2");
  for (size_t k = 2; k < t.size(); ++k) {
    const double expect = t0 + dt * double(k);
    if (std::abs(t[k] - expect) > 1e-9 * std::max(std::abs(expect), dt))
      fail(path, "non-uniform time grid at row " + std::to_string(k + 1));
  }
  Eigen::ArrayXcd data = Eigen::Map<const Eigen::ArrayXcd>(samples.data(), samples.size());
  return Signal(std::move(data), t0, dt);
}

Signal read_signal_f64le(const std::filesystem::path& path) {
  std::ifstream in = open_in(path, true);
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), 4) || std::memcmp(magic.data(), kMagic, 4) != 0)
    fail(path, "bad magic (expected HGTF)");
  const std::uint32_t version = get_u32(in, path);
  if (version != kVersion) fail(path, "unsupported version " + std::to_string(version));
  get_u64(in, path);  // reserved
  const double t0 = get_f64(in, path);
  const double dt = get_f64(in, path);
  const std::uint64_t count = get_u64(in, path);
  if (count < 2 || count > (1ull << 32)) fail(path, "implausible sample count");
  const auto n = Eigen::Index(count);
  Eigen::ArrayXcd samples(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    const double re = get_f64(in, path);
    const double im = get_f64(in, path);
    if (!std::isfinite(re) || !std::isfinite(im))
      fail(path, "non-finite sample at index " + std::to_string(k));
    samples[Eigen::Index(k)] = Complex(re, im);
  }
  return Signal(std::move(samples), t0, dt);
}

Signal read_signal(const std::filesystem::path& path, std::string_view format) {
  if (format == "csv") return read_signal_csv(path);
  if (format == "f64le") return read_signal_f64le(path);
  throw std::invalid_argument("read_signal: unknown format '" + std::string(format) + "'");
}

void write_signal_csv(const std::filesystem::path& path, const Signal& signal) {
  std::ofstream out = open_out(path, false);
  out << "t,re,im\n";
  const Eigen::ArrayXd t = signal.times();
  for (Eigen::Index j = 0; j < signal.size(); ++j)
    out << format_double(t[j]) << ',' << format_double(signal.samples[j].real()) << ','
        << format_double(signal.samples[j].imag()) << '\n';
}

void write_signal_f64le(const std::filesystem::path& path, const Signal& signal) {
  std::ofstream out = open_out(path, true);
  out.write(kMagic, 4);
  put_u32(out, kVersion);
  put_u64(out, 0);  // reserved
  put_f64(out, signal.t0);
  put_f64(out, signal.dt);
  put_u64(out, std::uint64_t(signal.size()));
  for (Eigen::Index j = 0; j < signal.size(); ++j) {
    put_f64(out, signal.samples[j].real());
    put_f64(out, signal.samples[j].imag());
  }
}

namespace {

template <typename Grid, typename CellWriter>
void write_grid_csv_impl(const std::filesystem::path& path, const Grid& grid,
                         CellWriter&& cell) {
  std::ofstream out = open_out(path, false);
  out << "omega\\T";
  for (Eigen::Index i = 0; i < grid.time_axis.count; ++i)
    out << ',' << format_double(grid.time_axis[i]);
  out << '\n';
  for (Eigen::Index j = 0; j < grid.omega_axis.count; ++j) {
    out << format_double(grid.omega_axis[j]);
    for (Eigen::Index i = 0; i < grid.time_axis.count; ++i) out << ',' << cell(i, j);
    out << '\n';
  }
}

}  // namespace

void write_grid_csv(const std::filesystem::path& path, const TFGrid& grid) {
  write_grid_csv_impl(path, grid,
                      [&](Eigen::Index i, Eigen::Index j) { return format_complex(grid.values(i, j)); });
}

void write_grid_csv(const std::filesystem::path& path, const TFDensity& grid) {
  write_grid_csv_impl(path, grid,
                      [&](Eigen::Index i, Eigen::Index j) { return format_double(grid.values(i, j)); });
}

TFDensity read_density_csv(const std::filesystem::path& path) {
  std::ifstream in = open_in(path, false);
  std::string line;
  if (!std::getline(in, line)) fail(path, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split(line, ',');
  if (header.empty() || header[0] != "omega\\T") fail(path, "malformed grid header");
  std::vector<double> t_values;
  for (size_t i = 1; i < header.size(); ++i) t_values.push_back(parse_double(header[i], path, 1));

  std::vector<double> w_values;
  std::vector<double> cells;
  int row = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    const auto fields = split(line, ',');
    if (fields.size() != t_values.size() + 1)
      fail(path, "wrong column count at row " + std::to_string(row));
    w_values.push_back(parse_double(fields[0], path, row));
    for (size_t i = 1; i < fields.size(); ++i) cells.push_back(parse_double(fields[i], path, row));
  }

  TFDensity grid;
  grid.time_axis = axis_from_values(t_values, path, "T axis");
  grid.omega_axis = axis_from_values(w_values, path, "omega axis");
  grid.values.resize(grid.time_axis.count, grid.omega_axis.count);
  for (Eigen::Index j = 0; j < grid.omega_axis.count; ++j)
    for (Eigen::Index i = 0; i < grid.time_axis.count; ++i)
      grid.values(i, j) = cells[size_t(j) * size_t(grid.time_axis.count) + size_t(i)];
  grid.kind = GridKind::energy_density;
  return grid;
}

void write_marginal_csv(const std::filesystem::path& path, const Marginal& marginal) {
  std::ofstream out = open_out(path, false);
  out << "axis,value\n";
  for (Eigen::Index i = 0; i < marginal.axis.count; ++i)
    out << format_double(marginal.axis[i]) << ',' << format_double(marginal.values[i]) << '\n';
}

void write_heatmap_ppm(const std::filesystem::path& path, const TFDensity& grid,
                       HeatmapScale scale, double floor) {
  if (!(floor > 0.0) || !(floor < 1.0))
    throw std::invalid_argument("write_heatmap_ppm: floor must be in (0, 1)");
  std::ofstream out = open_out(path, true);
  const Eigen::Index width = grid.time_axis.count;
  const Eigen::Index height = grid.omega_axis.count;
  out << "P6\n" << width << ' ' << height << "\n255\n";

  const double vmax = grid.values.maxCoeff();
  const double vmin = grid.values.minCoeff();
  const double amax = grid.values.abs().maxCoeff();
  std::vector<unsigned char> rowbuf(size_t(width) * 3);
  // top row = highest omega
  for (Eigen::Index j = height - 1; j >= 0; --j) {
    for (Eigen::Index i = 0; i < width; ++i) {
      const double v = grid.values(i, j);
      double t = 0.0;
      if (scale == HeatmapScale::linear) {
        t = vmax > vmin ? (v - vmin) / (vmax - vmin) : 0.0;
      } else if (amax > 0.0) {
        const double clamped = std::max(std::abs(v), floor * amax);
        t = std::log(clamped / (floor * amax)) / std::log(1.0 / floor);
      }
      const auto rgb = colormap(t);
      rowbuf[size_t(i) * 3 + 0] = rgb[0];
      rowbuf[size_t(i) * 3 + 1] = rgb[1];
      rowbuf[size_t(i) * 3 + 2] = rgb[2];
    }
    out.write(reinterpret_cast<const char*>(rowbuf.data()), std::streamsize(rowbuf.size()));
  }
}

void write_report(const std::filesystem::path& path, const Report& report) {
  std::ofstream out = open_out(path, false);
  for (const auto& [key, value] : report.entries) out << key << " = " << value << '\n';
}

}  // namespace hgtf
