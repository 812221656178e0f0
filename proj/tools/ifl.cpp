#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ifl/harness/config_file.hpp"
#include "ifl/harness/experiments.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> replicas;
  std::optional<int> threads;
  bool force = false;
  bool explore = false;
};

ifl::ExperimentConfig load(ifl::Kind kind, const Options& opt) {
  const auto file = opt.config.empty() ? ifl::ConfigFile::parse("", ifl::known_config_keys())
                                       : ifl::ConfigFile::load(opt.config, ifl::known_config_keys());
  auto cfg = ifl::make_config(kind, file);
  if (opt.seed) cfg.seed = *opt.seed;
  if (const char* env = std::getenv("IFL_SEED")) {
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ifl::UsageError(std::string("IFL_SEED is not an unsigned integer: '") + env + "'");
    }
    if (value != cfg.seed) {
      std::cerr << "note: IFL_SEED=" << value << " overrides seed " << cfg.seed << "\n";
    }
    cfg.seed = value;
  }
  if (opt.out) cfg.out_dir = *opt.out;
  if (opt.replicas) cfg.replicas = *opt.replicas;
  if (opt.threads) cfg.threads = *opt.threads;
  cfg.force = opt.force;
  cfg.explore = opt.explore;
  return cfg;
}

void report(const std::vector<std::string>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p << "\n";
}

int dispatch(ifl::Kind kind, const Options& opt) {
  const auto cfg = load(kind, opt);
  switch (kind) {
    case ifl::Kind::simulate:
      report(ifl::run_simulate_command(cfg));
      return 0;
    case ifl::Kind::pde:
      report(ifl::run_pde_command(cfg));
      return 0;
    case ifl::Kind::hydro: {
      const auto r = ifl::run_hydro(cfg);
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      report(ifl::write_hydro(r, cfg));
      for (std::size_t i = 0; i < r.pooled_error.size(); ++i) {
        std::cout << "N=" << cfg.n_list[i] << " mean abs error " << r.pooled_error[i] << " (s.e. "
                  << r.pooled_stderr[i] << ")\n";
      }
      return 0;
    }
    case ifl::Kind::fluct: {
      const auto r = ifl::run_fluct(cfg);
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      report(ifl::write_fluct(r, cfg));
      int failed = 0;
      for (const auto& s : r.stats) failed += !s.record.pass;
      std::cout << r.stats.size() - static_cast<std::size_t>(failed) << "/" << r.stats.size()
                << " statistics within tolerance\n";
      return 0;
    }
    case ifl::Kind::comb_verify: {
      const auto r = ifl::run_comb_verify(cfg);
      report(ifl::write_comb_verify(r, cfg));
      int failed = 0;
      for (const auto& rec : r.records) {
        if (rec.pass == "false") {
          ++failed;
          std::cerr << "FAIL " << rec.theorem << " p=" << rec.p << " count=" << rec.count << "\n";
        }
      }
      std::cout << r.records.size() << " records, " << failed << " failed\n";
      return r.all_pass ? 0 : 1;
    }
    case ifl::Kind::oracle_report: {
      const auto r = ifl::run_oracle_report(cfg);
      report(ifl::write_oracle_report(r, cfg));
      return r.all_pass ? 0 : 1;
    }
    case ifl::Kind::sample_check: {
      const auto r = ifl::run_sample_check(cfg);
      report(ifl::write_sample_check(r, cfg));
      std::cout << "exact vs law p=" << r.exact_vs_law.p_value << ", dynamics vs exact p="
                << r.dynamics_vs_exact.p_value << ", stationarity p=" << r.stationary_vs_start.p_value << "\n";
      return r.pass ? 0 : 1;
    }
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly perturbed corner-flip interface lab"};
  app.require_subcommand(1);
  Options opt;
  std::optional<ifl::Kind> chosen;
  const std::map<ifl::Kind, std::string> blurb = {
      {ifl::Kind::simulate, "run one trajectory and record Y, corners and U(phi)"},
      {ifl::Kind::pde, "solve the coupled density/integral PDE"},
      {ifl::Kind::hydro, "compare empirical pairings with the PDE over replicas"},
      {ifl::Kind::fluct, "stationary fluctuation and martingale statistics"},
      {ifl::Kind::comb_verify, "exact cardinality tables, partition function, binomial identity"},
      {ifl::Kind::oracle_report, "exact moments and two-point function by enumeration"},
      {ifl::Kind::sample_check, "goodness of fit of the exact and dynamic samplers"},
  };
  for (auto kind : {ifl::Kind::simulate, ifl::Kind::pde, ifl::Kind::hydro, ifl::Kind::fluct, ifl::Kind::comb_verify,
                    ifl::Kind::oracle_report, ifl::Kind::sample_check}) {
    auto* sub = app.add_subcommand(ifl::to_string(kind), blurb.at(kind));
    sub->add_option("--config", opt.config, "flat key=value config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "master seed (IFL_SEED takes precedence)");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--replicas", opt.replicas, "replica count");
    sub->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    sub->add_flag("--force", opt.force, "run even when a theorem hypothesis is violated");
    sub->add_flag("--explore", opt.explore, "allow non-prime p in comb-verify");
    sub->callback([kind, &chosen] { chosen = kind; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return dispatch(*chosen, opt);
  } catch (const ifl::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const ifl::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
