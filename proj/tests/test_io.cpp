#include "doctest.h"
#include "latsamp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace latsamp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format_real keeps 17 significant digits") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_real(-2.0) == "-2");
}

TEST_CASE("csv layout: metadata comments, header, typed rows") {
  CsvTable table;
  table.metadata = {{"experiment", "acf"}, {"seed", "7"}};
  table.columns = {"tau", "value"};
  table.integer_columns = {true, false};
  table.rows = {{0.0, 1.0}, {1.0, 0.25}};
  const std::string path = temp_path("latsamp_io_layout.csv");
  write_csv(path, table);
  CHECK(slurp(path) ==
        "# experiment=acf\n"
        "# seed=7\n"
        "tau,value\n"
        "0,1\n"
        "1,0.25\n");
  std::filesystem::remove(path);
}

TEST_CASE("csv rejects ragged rows and mismatched column flags") {
  const std::string path = temp_path("latsamp_io_bad.csv");
  CsvTable ragged;
  ragged.columns = {"a", "b"};
  ragged.rows = {{1.0}};
  CHECK_THROWS_AS(write_csv(path, ragged), std::invalid_argument);
  CHECK(!std::filesystem::exists(path));

  CsvTable flags;
  flags.columns = {"a", "b"};
  flags.integer_columns = {true};
  flags.rows = {{1.0, 2.0}};
  CHECK_THROWS_AS(write_csv(path, flags), std::invalid_argument);
  CHECK(!std::filesystem::exists(path));
}

TEST_CASE("failed writes leave no artifact behind") {
  const std::string path = temp_path("no_such_dir_latsamp/out.csv");
  CsvTable table;
  table.columns = {"a"};
  table.rows = {{1.0}};
  CHECK_THROWS_AS(write_csv(path, table), std::runtime_error);
  CHECK(!std::filesystem::exists(path));
  CHECK(!std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("sample csv is metadata plus bare integer rows") {
  const std::string path = temp_path("latsamp_io_samples.csv");
  write_sample_csv(path, {{"d", "2"}}, {{3, -1}, {0, 12}});
  CHECK(slurp(path) ==
        "# d=2\n"
        "3,-1\n"
        "0,12\n");
  std::filesystem::remove(path);
}

TEST_CASE("lsmp round trip preserves every coordinate") {
  const std::string path = temp_path("latsamp_io_roundtrip.lsmp");
  const std::vector<IntPoint> samples = {{5, -7, 0}, {-1, 2, 1000000007}, {0, 0, 0}};
  write_lsmp(path, 3, samples);
  const LsmpData data = read_lsmp(path);
  CHECK(data.d == 3);
  REQUIRE(data.samples.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) CHECK(data.samples[i] == samples[i]);
  CHECK(std::filesystem::file_size(path) == 20 + 3 * 3 * 8);
  std::filesystem::remove(path);
}

TEST_CASE("lsmp rejects bad magic and truncation") {
  const std::string path = temp_path("latsamp_io_corrupt.lsmp");
  {
    std::ofstream out(path, std::ios::binary);
    out << "NOPE";
  }
  CHECK_THROWS_WITH_AS(read_lsmp(path), doctest::Contains("bad magic"), std::runtime_error);

  write_lsmp(path, 2, {{1, 2}, {3, 4}});
  std::filesystem::resize_file(path, std::filesystem::file_size(path) - 5);
  CHECK_THROWS_WITH_AS(read_lsmp(path), doctest::Contains("truncated"), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("lsmp write validates dimensions") {
  const std::string path = temp_path("latsamp_io_dims.lsmp");
  CHECK_THROWS_AS(write_lsmp(path, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(write_lsmp(path, 2, {{1, 2, 3}}), std::invalid_argument);
  CHECK(!std::filesystem::exists(path));
}

}
