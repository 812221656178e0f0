#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "ifl/core/pairings.hpp"
#include "ifl/dynamics/engine.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"
#include "ifl/harness/runs.hpp"
#include "ifl/measures/samplers.hpp"

namespace ifl {

std::uint64_t stream_id(Kind kind, int n_index, std::uint64_t replica) {
  return (static_cast<std::uint64_t>(kind) << 56) | (static_cast<std::uint64_t>(n_index) << 40) | replica;
}

namespace {

class PairingObserver : public Observer {
 public:
  explicit PairingObserver(const std::vector<TestFunction>& phis) : phis_(phis) {}
  std::vector<std::string> columns() const override {
    std::vector<std::string> c;
    for (const auto& phi : phis_) c.push_back("pi_" + phi.id());
    return c;
  }
  void start(const HeightConfig&, const RateParams&) override {}
  void advance(const HeightConfig&, double) override {}
  void after_flip(const HeightConfig&, const CornerFlip&) override {}
  void record(double, const HeightConfig& config, std::vector<double>& row) override {
    for (const auto& phi : phis_) row.push_back(pairing_density(config, phi));
  }

 private:
  const std::vector<TestFunction>& phis_;
};

double grid_pairing(const std::vector<double>& rho, const TestFunction& phi) {
  const auto m = static_cast<double>(rho.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) acc += rho[i] * phi(static_cast<double>(i) / m);
  return acc / m;
}

}  // namespace

HydroResult run_hydro(const ExperimentConfig& cfg) {
  HydroResult result;
  result.warnings = check_hypotheses(cfg);
  std::vector<TestFunction> phis;
  for (const auto& id : cfg.phi_ids) phis.push_back(TestFunction::from_id(id));
  std::vector<double> times = cfg.times;
  std::sort(times.begin(), times.end());
  const double horizon = times.empty() ? cfg.horizon : times.back();
  if (times.empty()) times = {horizon};

  result.y0 = cfg.h0_anchor + cfg.rho0.height_increment_mean();
  result.pde = solve_coupled(cfg.rho0.grid(cfg.grid_m), result.y0, horizon, cfg.grid_m, cfg.dt_safety, times);
  std::vector<std::vector<double>> reference(times.size(), std::vector<double>(phis.size()));
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const auto& state = result.pde.at_time(times[ti]);
    for (std::size_t f = 0; f < phis.size(); ++f) reference[ti][f] = grid_pairing(state.rho, phis[f]);
  }

  const auto rho0 = cfg.rho0;
  for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
    const int n = cfg.n_list[ni];
    const auto params = RateParams::make(n, cfg.gamma);
    // empirical[replica][time][phi]
    std::vector<std::vector<std::vector<double>>> empirical(static_cast<std::size_t>(cfg.replicas));
    parallel_for(cfg.replicas, cfg.threads, [&](int r) {
      RngStream rng(cfg.seed, stream_id(Kind::hydro, static_cast<int>(ni), static_cast<std::uint64_t>(r)));
      ProfileMeasureSpec spec{[&rho0](double u) { return rho0(u); }, cfg.h0_anchor, n};
      auto config = sample_profile(spec, rng);
      PairingObserver obs(phis);
      Observer* list[] = {&obs};
      const auto traj = simulate(config, params, horizon, list, rng, times);
      auto& out = empirical[static_cast<std::size_t>(r)];
      out.assign(times.size(), std::vector<double>(phis.size()));
      for (std::size_t ti = 0; ti < times.size(); ++ti) {
        for (std::size_t f = 0; f < phis.size(); ++f) out[ti][f] = traj.rows[ti][3 + f];
      }
    });

    std::vector<double> pooled(static_cast<std::size_t>(cfg.replicas), 0.0);
    int pooled_cells = 0;
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      for (std::size_t f = 0; f < phis.size(); ++f) {
        std::vector<double> errs;
        for (int r = 0; r < cfg.replicas; ++r) {
          const double e = empirical[static_cast<std::size_t>(r)][ti][f];
          const double err = std::abs(e - reference[ti][f]);
          result.rows.push_back({n, cfg.gamma, times[ti], phis[f].id(), r, e, reference[ti][f], err});
          errs.push_back(err);
          if (phis[f].kind() != TestFunction::Kind::constant) pooled[static_cast<std::size_t>(r)] += err;
        }
        if (phis[f].kind() != TestFunction::Kind::constant) ++pooled_cells;
        result.cells.push_back({n, times[ti], phis[f].id(), summarize(errs)});
      }
    }
    for (double& v : pooled) v /= std::max(pooled_cells, 1);
    const auto s = summarize(pooled);
    result.pooled_error.push_back(s.mean);
    result.pooled_stderr.push_back(s.mean_stderr);
  }

  for (std::size_t i = 1; i < result.pooled_error.size(); ++i) {
    if (!(result.pooled_error[i] < result.pooled_error[i - 1])) result.pooled_decreasing = false;
  }
  std::map<std::pair<double, std::string>, std::vector<const HydroCell*>> by_cell;
  for (const auto& c : result.cells) by_cell[{c.t, c.phi_id}].push_back(&c);
  for (const auto& [key, cells] : by_cell) {
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const auto& a = cells[i - 1]->error;
      const auto& b = cells[i]->error;
      const double se = std::hypot(a.mean_stderr, b.mean_stderr);
      if (b.mean - a.mean > 3.0 * se && se > 0) result.no_significant_increase = false;
    }
  }
  return result;
}

std::vector<std::string> write_hydro(const HydroResult& result, const ExperimentConfig& cfg) {
  CsvBuilder csv({"N", "gamma", "t", "phi_id", "replica", "empirical", "pde", "abs_err"});
  for (const auto& r : result.rows) {
    csv.cell(r.n).cell(r.gamma).cell(r.t).cell(r.phi_id).cell(r.replica).cell(r.empirical).cell(r.pde).cell(r.abs_err);
    csv.end_row();
  }
  const auto csv_path = output_path(cfg.out_dir, "hydro.csv");
  write_atomic(csv_path, csv.str());

  nlohmann::json j;
  j["gamma"] = cfg.gamma;
  j["Y0"] = result.y0;
  j["tau0"] = result.pde.tau0 ? nlohmann::json(*result.pde.tau0) : nlohmann::json(nullptr);
  j["N"] = cfg.n_list;
  j["replicas"] = cfg.replicas;
  j["pooled_error"] = result.pooled_error;
  j["pooled_stderr"] = result.pooled_stderr;
  j["pooled_decreasing"] = result.pooled_decreasing;
  j["no_significant_increase"] = result.no_significant_increase;
  auto cells = nlohmann::json::array();
  for (const auto& c : result.cells) {
    cells.push_back({{"N", c.n}, {"t", c.t}, {"phi_id", c.phi_id}, {"mean_abs_err", c.error.mean},
                     {"stderr", c.error.mean_stderr}});
  }
  j["cells"] = cells;
  j["warnings"] = result.warnings;
  const auto json_path = output_path(cfg.out_dir, "hydro_summary.json");
  write_atomic(json_path, j.dump(2) + "\n");
  return {csv_path, json_path};
}

}  // namespace ifl
