#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latsamp/config.hpp"
#include "latsamp/experiments.hpp"

using latsamp::ExperimentConfig;

namespace {

// One set of flag storage is enough: only the chosen subcommand parses.
struct FlagValues {
  std::string config_path;
  int d = 0;
  double sigma2 = 0.0;
  int replicas = 0;
  std::string t_values;
  std::uint64_t seed = 0;
  std::string out;
  std::string backend;
  std::string lattice;
};

void add_common_flags(CLI::App* sub, FlagValues& fv) {
  sub->add_option("--config", fv.config_path, "key=value configuration file; flags override it")
      ->option_text("PATH");
  sub->add_option("--d", fv.d, "dimension")->check(CLI::Range(1, 10000));
  sub->add_option("--sigma2", fv.sigma2, "Gaussian variance parameter")
      ->check(CLI::PositiveNumber);
  sub->add_option("--replicas", fv.replicas, "independent chains (or samples)")
      ->check(CLI::Range(100, 100000000));
  sub->add_option("--t-values", fv.t_values, "comma-separated iteration counts (dimensions for bench)");
  sub->add_option("--seed", fv.seed, "master seed");
  sub->add_option("--out", fv.out, "output artifact path")->option_text("PATH");
  sub->add_option("--backend", fv.backend, "proposal backend")
      ->check(CLI::IsMember({"exact", "hmc"}));
  sub->add_option("--lattice", fv.lattice,
                  "zd, leech, or file:<path> with a plain-text basis");
}

ExperimentConfig effective_config(const CLI::App* sub, const FlagValues& fv) {
  ExperimentConfig cfg;
  if (sub->count("--config") > 0) cfg = latsamp::load_config(fv.config_path);
  ExperimentConfig flags;
  if (sub->count("--d") > 0) flags.d = fv.d;
  if (sub->count("--sigma2") > 0) flags.sigma2 = fv.sigma2;
  if (sub->count("--replicas") > 0) flags.replicas = fv.replicas;
  if (sub->count("--t-values") > 0) flags.t_values = latsamp::parse_int_list(fv.t_values);
  if (sub->count("--seed") > 0) flags.seed = fv.seed;
  if (sub->count("--out") > 0) flags.out = fv.out;
  if (sub->count("--backend") > 0) flags.backend = fv.backend;
  if (sub->count("--lattice") > 0) {
    const std::string& lat = fv.lattice;
    if (lat != "zd" && lat != "leech" && lat.rfind("file:", 0) != 0)
      throw std::runtime_error("lattice must be zd, leech, or file:<path>");
    flags.lattice = lat;
  }
  latsamp::merge_overrides(cfg, flags);
  return cfg;
}

int dispatch(const std::string& name, ExperimentConfig cfg) {
  if (name == "sample") return latsamp::run_sample(cfg);
  if (name == "bound") return latsamp::run_bound(cfg);
  if (!cfg.experiment) {
    if (name == "tvd-curve") {
      const std::string lat = cfg.lattice.value_or("zd");
      if (lat == "zd") cfg.experiment = "iso-gaussian";
      else if (lat == "leech") cfg.experiment = "leech-gaussian";
      else
        throw std::runtime_error(
            "tvd-curve needs --lattice zd or leech (or an experiment in the config file)");
    } else if (name == "acf") {
      cfg.experiment = "acf";
    } else if (name == "bench") {
      cfg.experiment = "bench-runtime";
    } else if (name == "probe-appendix-a") {
      cfg.experiment = "appendix-a";
    }
  }
  return latsamp::run_experiment(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice samplers, convergence diagnostics, and benchmark artifacts"};
  app.require_subcommand(1);
  FlagValues fv;
  add_common_flags(app.add_subcommand("sample", "draw lattice points and write them out"), fv);
  add_common_flags(
      app.add_subcommand("tvd-curve", "marginal total-variation distance against iteration count"),
      fv);
  add_common_flags(app.add_subcommand("acf", "chain autocorrelation curve"), fv);
  add_common_flags(app.add_subcommand("bench", "per-iteration runtime comparison across dimensions"),
                   fv);
  add_common_flags(app.add_subcommand("bound", "geometric convergence bound curve"), fv);
  add_common_flags(
      app.add_subcommand("probe-appendix-a", "degeneracy probe across window indices"), fv);
  CLI11_PARSE(app, argc, argv);

  const CLI::App* sub = app.get_subcommands().front();
  try {
    return dispatch(sub->get_name(), effective_config(sub, fv));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "latsamp: %s\n", e.what());
    return 1;
  }
}
