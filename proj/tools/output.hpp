#pragma once

#include <string>
#include <vector>

#include "circq/minkowski.hpp"

namespace circq::app {

// 17 significant digits, scientific
std::string fmt(double v);

// Creates dir (and parents); throws UsageError if it cannot be written to.
void ensure_dir(const std::string& dir);

class CsvWriter {
 public:
  // header is echoed as a leading '# ' comment line
  CsvWriter(const std::string& path, const std::string& header, const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

 private:
  std::string path_;
  std::FILE* fp_;
};

void write_grid_csv(const std::string& path, const std::string& header, const Grid2D& g);
// binary P5, |values| scaled linearly from 0 to the per-file max
void write_pgm(const std::string& path, const std::string& header, const Grid2D& g);

}  // namespace circq::app
