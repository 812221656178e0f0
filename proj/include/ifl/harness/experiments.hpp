#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "ifl/harness/experiment_config.hpp"
#include "ifl/harness/stats.hpp"
#include "ifl/pde/coupled_solver.hpp"

namespace ifl {

/// Stream id for replica `replica` of the `n_index`-th system size of an experiment kind.
std::uint64_t stream_id(Kind kind, int n_index, std::uint64_t replica);

struct HydroRow {
  int n = 0;
  double gamma = 0.0;
  double t = 0.0;
  std::string phi_id;
  int replica = 0;
  double empirical = 0.0;
  double pde = 0.0;
  double abs_err = 0.0;
};

struct HydroCell {
  int n = 0;
  double t = 0.0;
  std::string phi_id;
  Summary error;
};

struct HydroResult {
  std::vector<HydroRow> rows;
  std::vector<HydroCell> cells;
  /// Mean absolute error over all non-constant (t, phi) per N, with its standard error.
  std::vector<double> pooled_error;
  std::vector<double> pooled_stderr;
  /// No (t, phi) cell increases from one N to the next by more than 3 standard errors.
  bool no_significant_increase = true;
  /// Pooled error strictly decreasing along the N list.
  bool pooled_decreasing = true;
  double y0 = 0.0;
  PdeTrajectory pde;
  std::vector<std::string> warnings;
};

HydroResult run_hydro(const ExperimentConfig& cfg);
std::vector<std::string> write_hydro(const HydroResult& result, const ExperimentConfig& cfg);

struct FluctStat {
  int n = 0;
  double gamma = 0.0;
  double t = 0.0;
  std::string phi_id;
  StatRecord record;
};

struct MartingaleRow {
  int n = 0;
  int replica = 0;
  double t = 0.0;
  std::string phi_id;
  double u, k, b, m, qv, p, kp, bp, mp, qvp, x, qvx;
};

struct IsometryRow {
  int n = 0;
  std::string phi_id;
  double s = 0.0;
  double t = 0.0;
  Summary increment_sq;
  Summary qv_increment;
  bool pass = false;
};

struct FluctResult {
  std::vector<FluctStat> stats;
  std::vector<MartingaleRow> martingale;
  std::vector<IsometryRow> isometry;
  std::vector<std::string> warnings;
  bool gamma_flagged = false;

  const StatRecord& find(int n, double t, const std::string& phi_id, const std::string& stat) const;
};

FluctResult run_fluct(const ExperimentConfig& cfg);
std::vector<std::string> write_fluct(const FluctResult& result, const ExperimentConfig& cfg);

/// One comb-verify record. `pass` is "true", "false" or "not-applicable".
struct CombRecord {
  std::string theorem;
  long long p = 0;
  std::optional<long long> k;
  std::optional<long long> j;
  std::string count;
  double reference_value = 0.0;
  double bound = 0.0;
  std::string pass;
};

struct CombResult {
  std::vector<CombRecord> records;
  bool all_pass = true;
};

CombResult run_comb_verify(const ExperimentConfig& cfg);
std::vector<std::string> write_comb_verify(const CombResult& result, const ExperimentConfig& cfg);

struct MomentRow {
  int n = 0;
  double gamma = 0.0;
  Restriction restriction = Restriction::all;
  std::vector<int> sites;
  int m = 0;
  double value = 0.0;
  double scaled_value = 0.0;
  bool bound_pass = true;
};

struct OracleResult {
  std::vector<MomentRow> moments;
  /// (N, d, N * E[xibar(0) xibar(d)])
  std::vector<std::tuple<int, int, double>> two_point;
  /// (N, phi id, exact variance, limit)
  std::vector<std::tuple<int, std::string, double, double>> variance;
  std::vector<std::string> measure_json;
  bool all_pass = true;
};

OracleResult run_oracle_report(const ExperimentConfig& cfg);
std::vector<std::string> write_oracle_report(const OracleResult& result, const ExperimentConfig& cfg);

struct SampleCheckResult {
  int n = 0;
  double gamma = 0.0;
  ChiSquare exact_vs_law;
  ChiSquare dynamics_vs_exact;
  ChiSquare stationary_vs_start;
  double oracle_two_point = 0.0;
  Summary exact_two_point;
  Summary dynamics_two_point;
  Summary stationary_two_point_start;
  Summary stationary_two_point_end;
  bool two_point_pass = false;
  bool stationary_two_point_pass = false;
  bool pass = false;
};

SampleCheckResult run_sample_check(const ExperimentConfig& cfg);
std::vector<std::string> write_sample_check(const SampleCheckResult& result, const ExperimentConfig& cfg);

std::vector<std::string> run_simulate_command(const ExperimentConfig& cfg);
std::vector<std::string> run_pde_command(const ExperimentConfig& cfg);

}  // namespace ifl
