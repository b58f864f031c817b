#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latsamp/common.hpp"

namespace latsamp {

// Metadata ("# key=value" comment lines), one column-name header line, then
// data rows. Reals print with 17 significant digits; whole numbers in integer
// columns print without a decimal point.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<bool> integer_columns;  // optional; empty means all real
};

// Writes through a sibling temporary file and renames, so a failed write
// leaves no partial artifact behind.
void write_csv(const std::string& path, const CsvTable& table);

void write_sample_csv(const std::string& path,
                      const std::vector<std::pair<std::string, std::string>>& metadata,
                      const std::vector<IntPoint>& samples);

// Binary stream: "LSMP", version u32, d u32, count u64, then count x d
// little-endian signed 64-bit coordinates.
void write_lsmp(const std::string& path, int d, const std::vector<IntPoint>& samples);

struct LsmpData {
  int d = 0;
  std::vector<IntPoint> samples;
};
LsmpData read_lsmp(const std::string& path);

std::string format_real(double v);

}  // namespace latsamp
