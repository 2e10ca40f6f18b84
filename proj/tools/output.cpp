#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "config.hpp"

namespace circq::app {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw UsageError("cannot create output directory '" + dir + "'");
  auto probe = std::filesystem::path(dir) / ".circq_probe";
  std::FILE* fp = std::fopen(probe.c_str(), "wb");
  if (!fp) throw UsageError("output directory '" + dir + "' is not writable");
  std::fclose(fp);
  std::filesystem::remove(probe, ec);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& header, const std::vector<std::string>& columns)
    : path_(path), fp_(std::fopen(path.c_str(), "wb")) {
  if (!fp_) throw UsageError("cannot open '" + path + "' for writing");
  std::fprintf(fp_, "# %s\n", header.c_str());
  for (std::size_t i = 0; i < columns.size(); ++i) std::fprintf(fp_, "%s%s", i ? "," : "", columns[i].c_str());
  std::fputc('\n', fp_);
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) std::fprintf(fp_, "%s%s", i ? "," : "", fmt(values[i]).c_str());
  std::fputc('\n', fp_);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) std::fprintf(fp_, "%s%s", i ? "," : "", cells[i].c_str());
  std::fputc('\n', fp_);
}

CsvWriter::~CsvWriter() {
  if (fp_) std::fclose(fp_);
}

void write_grid_csv(const std::string& path, const std::string& header, const Grid2D& g) {
  CsvWriter w(path, header, {"x0", "x1", "re", "im", "abs"});
  for (int i0 = 0; i0 < g.n; ++i0)
    for (int i1 = 0; i1 < g.n; ++i1) {
      cplx v = g.at(i0, i1);
      w.row(std::vector<double>{g.coord(i0), g.coord(i1), v.real(), v.imag(), std::abs(v)});
    }
}

void write_pgm(const std::string& path, const std::string& header, const Grid2D& g) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw UsageError("cannot open '" + path + "' for writing");
  double mx = 0.0;
  for (auto v : g.values) mx = std::max(mx, std::abs(v));
  std::fprintf(fp, "P5\n# %s\n%d %d\n255\n", header.c_str(), g.n, g.n);
  // rows run from +x1 (top) to -x1, columns along x0
  std::vector<unsigned char> line(static_cast<std::size_t>(g.n));
  for (int r = g.n - 1; r >= 0; --r) {
    for (int c = 0; c < g.n; ++c) {
      double s = mx > 0.0 ? std::abs(g.at(c, r)) / mx : 0.0;
      line[c] = static_cast<unsigned char>(std::lround(255.0 * s));
    }
    std::fwrite(line.data(), 1, line.size(), fp);
  }
  std::fclose(fp);
}

}  // namespace circq::app
