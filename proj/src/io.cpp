#include "latsamp/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace latsamp {

namespace {

class AtomicFile {
 public:
  AtomicFile(const std::string& path, std::ios::openmode mode)
      : path_(path), tmp_(path + ".tmp"), out_(tmp_, mode | std::ios::trunc) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + tmp_);
  }

  ~AtomicFile() {
    if (!committed_) {
      out_.close();
      std::remove(tmp_.c_str());
    }
  }

  std::ofstream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) throw std::runtime_error("write failed: " + tmp_);
    out_.close();
    if (std::rename(tmp_.c_str(), path_.c_str()) != 0)
      throw std::runtime_error("cannot move into place: " + path_);
    committed_ = true;
  }

 private:
  std::string path_;
  std::string tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

void append_le64(std::string& buf, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) buf.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void append_le32(std::string& buf, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) buf.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

std::uint64_t take_le64(const char* p) {
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[b])) << (8 * b);
  return v;
}

std::uint32_t take_le32(const char* p) {
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[b])) << (8 * b);
  return v;
}

constexpr std::uint32_t kLsmpVersion = 1;

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
  if (!table.integer_columns.empty() && table.integer_columns.size() != table.columns.size())
    throw std::invalid_argument("csv: integer_columns size mismatch");
  AtomicFile file(path, std::ios::out);
  std::ofstream& out = file.stream();
  for (const auto& [key, value] : table.metadata) out << "# " << key << "=" << value << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c == 0 ? "" : ",") << table.columns[c];
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::invalid_argument("csv: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ",";
      const bool integral = !table.integer_columns.empty() && table.integer_columns[c];
      if (integral)
        out << static_cast<std::int64_t>(row[c]);
      else
        out << format_real(row[c]);
    }
    out << "\n";
  }
  file.commit();
}

void write_sample_csv(const std::string& path,
                      const std::vector<std::pair<std::string, std::string>>& metadata,
                      const std::vector<IntPoint>& samples) {
  AtomicFile file(path, std::ios::out);
  std::ofstream& out = file.stream();
  for (const auto& [key, value] : metadata) out << "# " << key << "=" << value << "\n";
  for (const IntPoint& z : samples) {
    for (std::size_t i = 0; i < z.size(); ++i) out << (i == 0 ? "" : ",") << z[i];
    out << "\n";
  }
  file.commit();
}

void write_lsmp(const std::string& path, int d, const std::vector<IntPoint>& samples) {
  if (d <= 0) throw std::invalid_argument("lsmp: dimension must be positive");
  std::string buf;
  buf.reserve(20 + samples.size() * static_cast<std::size_t>(d) * 8);
  buf += "LSMP";
  append_le32(buf, kLsmpVersion);
  append_le32(buf, static_cast<std::uint32_t>(d));
  append_le64(buf, samples.size());
  for (const IntPoint& z : samples) {
    if (static_cast<int>(z.size()) != d) throw std::invalid_argument("lsmp: sample dimension mismatch");
    for (std::int64_t v : z) append_le64(buf, static_cast<std::uint64_t>(v));
  }
  AtomicFile file(path, std::ios::out | std::ios::binary);
  file.stream().write(buf.data(), static_cast<std::streamsize>(buf.size()));
  file.commit();
}

LsmpData read_lsmp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 20 || buf.compare(0, 4, "LSMP") != 0)
    throw std::runtime_error("lsmp: bad magic in " + path);
  if (take_le32(buf.data() + 4) != kLsmpVersion)
    throw std::runtime_error("lsmp: unsupported version in " + path);
  LsmpData data;
  data.d = static_cast<int>(take_le32(buf.data() + 8));
  const std::uint64_t count = take_le64(buf.data() + 12);
  if (data.d <= 0 || buf.size() != 20 + count * static_cast<std::uint64_t>(data.d) * 8)
    throw std::runtime_error("lsmp: truncated payload in " + path);
  data.samples.resize(count, IntPoint(static_cast<std::size_t>(data.d)));
  const char* p = buf.data() + 20;
  for (std::uint64_t s = 0; s < count; ++s)
    for (int i = 0; i < data.d; ++i, p += 8)
      data.samples[s][static_cast<std::size_t>(i)] = static_cast<std::int64_t>(take_le64(p));
  return data;
}

}  // namespace latsamp
