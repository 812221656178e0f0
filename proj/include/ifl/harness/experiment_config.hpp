#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ifl/harness/config_file.hpp"
#include "ifl/measures/exact_measure.hpp"
#include "ifl/pde/heat_reference.hpp"

namespace ifl {

/// A configuration that violates a theorem hypothesis without --force.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { simulate, pde, hydro, fluct, comb_verify, oracle_report, sample_check };

std::string to_string(Kind kind);
Kind kind_from_string(const std::string& s);
/// Section prefix used in config files ("hydro", "comb", ...).
std::string section_of(Kind kind);

struct ExperimentConfig {
  Kind kind = Kind::hydro;
  std::uint64_t seed = 20240607;
  std::string out_dir = "out";
  int threads = 0;
  bool force = false;
  bool explore = false;

  std::vector<int> n_list;
  double gamma = 1.0;
  double horizon = 1.0;
  int replicas = 1;
  std::vector<double> times;
  std::vector<std::string> phi_ids;

  FourierProfile rho0;
  double h0_anchor = 0.5;
  int grid_m = 256;
  double dt_safety = 0.4;
  double y0 = 1.0;
  int stride = 1;

  std::vector<int> primes;
  std::vector<std::vector<int>> beta_sites;
  std::vector<std::vector<int>> gamma_sites;
  std::vector<int> partition_primes;
  double partition_gamma = 1.0;
  int binom_max = 30;

  std::vector<std::vector<int>> tuples;
  std::vector<Restriction> restrictions;

  int draws = 100000;
  int dyn_replicas = 10000;
  double burn_in = 5.0;

  std::string init = "zigzag";
  int grid_points = 64;
  bool ledger = true;
};

std::set<std::string> known_config_keys();

/// Defaults for `kind`, overridden by the matching section of `file`.
ExperimentConfig make_config(Kind kind, const ConfigFile& file);
ExperimentConfig default_config(Kind kind);

/// Enforces the theorem hypotheses (n odd for hydro; p prime and gamma > 6/7
/// for fluct) unless cfg.force. Returns warnings for flagged-but-allowed cases.
std::vector<std::string> check_hypotheses(const ExperimentConfig& cfg);

/// "1:0.3,2:0.1" -> Fourier amplitudes by mode.
std::vector<std::pair<int, double>> parse_mode_list(const std::string& value);

}  // namespace ifl
