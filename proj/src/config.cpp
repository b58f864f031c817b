#include "latsamp/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latsamp {

const std::vector<std::string> kExperimentNames = {
    "iso-gaussian", "leech-gaussian", "perfect-security", "bench-runtime",
    "acceptance-vs-dim", "acf", "appendix-a"};

const std::vector<std::string> kBackendNames = {"exact", "hmc"};

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + message);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long long parse_integer(const std::string& v, int line, const std::string& key) {
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &pos);
  } catch (...) {
    fail(line, key + " must be an integer, got '" + v + "'");
  }
  if (pos != v.size()) fail(line, key + " must be an integer, got '" + v + "'");
  return out;
}

double parse_real(const std::string& v, int line, const std::string& key) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (...) {
    fail(line, key + " must be a real number, got '" + v + "'");
  }
  if (pos != v.size()) fail(line, key + " must be a real number, got '" + v + "'");
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::runtime_error("empty entry in integer list '" + text + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (...) {
      throw std::runtime_error("bad integer '" + item + "' in list");
    }
    if (pos != item.size()) throw std::runtime_error("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw std::runtime_error("empty integer list");
  return out;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    const std::string stripped = trim(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) fail(line, "expected key=value, got '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) fail(line, "missing key before '='");
    if (value.empty()) fail(line, "missing value for " + key);

    if (key == "experiment") {
      if (std::find(kExperimentNames.begin(), kExperimentNames.end(), value) ==
          kExperimentNames.end())
        fail(line, "unknown experiment '" + value + "'");
      cfg.experiment = value;
    } else if (key == "d") {
      const long long v = parse_integer(value, line, key);
      if (v < 1 || v > 10000) fail(line, "d must be in [1, 10000]");
      cfg.d = static_cast<int>(v);
    } else if (key == "sigma2") {
      const double v = parse_real(value, line, key);
      if (!(v > 0.0)) fail(line, "sigma2 must be positive");
      cfg.sigma2 = v;
    } else if (key == "replicas") {
      const long long v = parse_integer(value, line, key);
      if (v < 100) fail(line, "replicas must be at least 100");
      cfg.replicas = static_cast<int>(v);
    } else if (key == "t_values") {
      std::vector<int> vs;
      try {
        vs = parse_int_list(value);
      } catch (const std::exception& e) {
        fail(line, e.what());
      }
      for (int t : vs)
        if (t < 0) fail(line, "t_values entries must be nonnegative");
      cfg.t_values = std::move(vs);
    } else if (key == "seed") {
      try {
        std::size_t pos = 0;
        cfg.seed = std::stoull(value, &pos);
        if (pos != value.size()) fail(line, "seed must be an unsigned integer");
      } catch (const std::runtime_error&) {
        throw;
      } catch (...) {
        fail(line, "seed must be an unsigned integer, got '" + value + "'");
      }
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "backend") {
      if (std::find(kBackendNames.begin(), kBackendNames.end(), value) == kBackendNames.end())
        fail(line, "backend must be one of {exact, hmc}");
      cfg.backend = value;
    } else if (key == "lattice") {
      if (value != "zd" && value != "leech" && value.rfind("file:", 0) != 0)
        fail(line, "lattice must be zd, leech, or file:<path>");
      cfg.lattice = value;
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  if (cfg.experiment) out << "experiment=" << *cfg.experiment << "\n";
  if (cfg.d) out << "d=" << *cfg.d << "\n";
  if (cfg.sigma2) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *cfg.sigma2);
    out << "sigma2=" << buf << "\n";
  }
  if (cfg.replicas) out << "replicas=" << *cfg.replicas << "\n";
  if (cfg.t_values) {
    out << "t_values=";
    for (std::size_t i = 0; i < cfg.t_values->size(); ++i)
      out << (i == 0 ? "" : ",") << (*cfg.t_values)[i];
    out << "\n";
  }
  if (cfg.seed) out << "seed=" << *cfg.seed << "\n";
  if (cfg.out) out << "out=" << *cfg.out << "\n";
  if (cfg.backend) out << "backend=" << *cfg.backend << "\n";
  if (cfg.lattice) out << "lattice=" << *cfg.lattice << "\n";
  return out.str();
}

void merge_overrides(ExperimentConfig& base, const ExperimentConfig& overrides) {
  if (overrides.experiment) base.experiment = overrides.experiment;
  if (overrides.d) base.d = overrides.d;
  if (overrides.sigma2) base.sigma2 = overrides.sigma2;
  if (overrides.replicas) base.replicas = overrides.replicas;
  if (overrides.t_values) base.t_values = overrides.t_values;
  if (overrides.seed) base.seed = overrides.seed;
  if (overrides.out) base.out = overrides.out;
  if (overrides.backend) base.backend = overrides.backend;
  if (overrides.lattice) base.lattice = overrides.lattice;
}

}  // namespace latsamp
