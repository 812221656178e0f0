#include <sstream>

#include "ifl/core/config_text.hpp"
#include "ifl/dynamics/engine.hpp"
#include "ifl/dynamics/ledger.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"
#include "ifl/measures/samplers.hpp"
#include "ifl/pde/pde_io.hpp"

namespace ifl {

namespace {

HeightConfig initial_config(const ExperimentConfig& cfg, int n, RngStream& rng) {
  if (cfg.init == "zigzag") return HeightConfig::zigzag(n, 0);
  if (cfg.init == "invariant") return sample_invariant(n, cfg.gamma, rng);
  if (cfg.init == "profile") {
    const auto rho0 = cfg.rho0;
    return sample_profile({[rho0](double u) { return rho0(u); }, cfg.h0_anchor, n}, rng);
  }
  if (cfg.init.rfind("N=", 0) == 0) {
    auto c = parse_config(cfg.init);
    if (c.size() != n) throw UsageError("simulate.init has N=" + std::to_string(c.size()) + " but simulate.N is " +
                                        std::to_string(n));
    return c;
  }
  throw UsageError("simulate.init must be zigzag, invariant, profile or a configuration line, got '" + cfg.init + "'");
}

}  // namespace

std::vector<std::string> run_simulate_command(const ExperimentConfig& cfg) {
  check_hypotheses(cfg);
  if (cfg.n_list.size() != 1) throw UsageError("simulate takes exactly one N");
  const int n = cfg.n_list.front();
  RngStream rng(cfg.seed, stream_id(Kind::simulate, 0, 0));
  auto config = initial_config(cfg, n, rng);
  const auto initial = to_text(config);
  std::vector<TestFunction> phis;
  for (const auto& id : cfg.phi_ids) phis.push_back(TestFunction::from_id(id));
  MartingaleLedger ledger(phis);
  std::vector<Observer*> observers;
  if (cfg.ledger) observers.push_back(&ledger);
  const auto traj = simulate(config, RateParams::make(n, cfg.gamma), cfg.horizon, observers, rng,
                             uniform_grid(cfg.horizon, cfg.grid_points));
  std::ostringstream csv;
  write_csv(csv, traj);
  std::vector<std::string> paths{output_path(cfg.out_dir, "trajectory.csv"), output_path(cfg.out_dir, "configs.txt")};
  write_atomic(paths[0], csv.str());
  write_atomic(paths[1], "initial " + initial + "\nfinal " + to_text(config) + "\nevents " +
                             std::to_string(traj.events) + "\n");
  return paths;
}

std::vector<std::string> run_pde_command(const ExperimentConfig& cfg) {
  if (cfg.grid_m < 8) throw UsageError("pde.M must be at least 8");
  if (cfg.stride < 1) throw UsageError("pde.stride must be positive");
  const auto traj = solve_coupled(cfg.rho0.grid(cfg.grid_m), cfg.y0, cfg.horizon, cfg.grid_m, cfg.dt_safety,
                                  cfg.times.empty() ? default_record_times(cfg.horizon) : cfg.times);
  std::ostringstream csv;
  write_pde_csv(csv, traj, cfg.stride);
  std::vector<std::string> paths{output_path(cfg.out_dir, "pde.csv"), output_path(cfg.out_dir, "pde_summary.json")};
  write_atomic(paths[0], csv.str());
  write_atomic(paths[1], pde_summary_json(traj) + "\n");
  return paths;
}

}  // namespace ifl
