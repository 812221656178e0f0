#include "ifl/harness/experiment_config.hpp"

#include <cmath>
#include <map>

#include "ifl/combinatorics/bigint.hpp"

namespace ifl {

namespace {

const std::map<std::string, std::set<std::string>>& section_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"simulate", {"N", "gamma", "T", "init", "grid_points", "phi", "ledger"}},
      {"pde", {"M", "T", "Y0", "dt_safety", "rho0_mean", "rho0_cos", "rho0_sin", "stride"}},
      {"hydro", {"N", "gamma", "T", "replicas", "times", "phi", "rho0_mean", "rho0_cos", "rho0_sin", "h0_anchor", "M",
                 "dt_safety"}},
      {"fluct", {"N", "gamma", "T", "replicas", "times", "phi"}},
      {"comb", {"primes", "beta_sites", "gamma_sites", "partition_primes", "partition_gamma", "binom_max"}},
      {"oracle", {"N", "gamma", "tuples", "restrictions"}},
      {"sample", {"N", "gamma", "draws", "dyn_replicas", "burn_in"}},
  };
  return keys;
}

std::vector<int> odd_primes_up_to(int limit) {
  std::vector<int> out;
  for (int p = 3; p <= limit; p += 2) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::simulate:
      return "simulate";
    case Kind::pde:
      return "pde";
    case Kind::hydro:
      return "hydro";
    case Kind::fluct:
      return "fluct";
    case Kind::comb_verify:
      return "comb-verify";
    case Kind::oracle_report:
      return "oracle-report";
    case Kind::sample_check:
      return "sample-check";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  for (auto k : {Kind::simulate, Kind::pde, Kind::hydro, Kind::fluct, Kind::comb_verify, Kind::oracle_report,
                 Kind::sample_check}) {
    if (to_string(k) == s) return k;
  }
  throw UsageError("unknown experiment kind '" + s + "'");
}

std::string section_of(Kind kind) {
  switch (kind) {
    case Kind::comb_verify:
      return "comb";
    case Kind::oracle_report:
      return "oracle";
    case Kind::sample_check:
      return "sample";
    default:
      return to_string(kind);
  }
}

std::set<std::string> known_config_keys() {
  std::set<std::string> keys{"seed", "out", "threads"};
  for (const auto& [section, names] : section_keys()) {
    for (const auto& name : names) keys.insert(section + "." + name);
  }
  return keys;
}

std::vector<std::pair<int, double>> parse_mode_list(const std::string& value) {
  std::vector<std::pair<int, double>> out;
  for (const auto& item : split_list(value)) {
    const auto parts = split_list(item, ':');
    if (parts.size() != 2) throw UsageError("expected mode:amplitude, got '" + item + "'");
    out.emplace_back(static_cast<int>(parse_int(parts[0], item)), parse_double(parts[1], item));
  }
  return out;
}

ExperimentConfig default_config(Kind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.rho0.mean = 0.5;
  c.rho0.modes = {{1, 0.3, 0.0}};
  switch (kind) {
    case Kind::hydro:
      c.n_list = {126, 250, 502};
      c.horizon = 1.0;
      c.replicas = 20;
      c.times = {0.25, 1.0};
      c.phi_ids = {"one", "cos1", "sin1", "cos2", "sin2"};
      break;
    case Kind::fluct:
      c.n_list = {202};
      c.horizon = 0.5;
      c.replicas = 200;
      c.phi_ids = {"one", "cos1", "sin1", "cos2", "sin2", "cos3", "sin3"};
      break;
    case Kind::simulate:
      c.n_list = {50};
      c.horizon = 1.0;
      c.phi_ids = {"cos1"};
      break;
    case Kind::pde:
      c.horizon = 3.0;
      break;
    case Kind::comb_verify:
      c.primes = {3, 5, 7, 11, 13};
      c.beta_sites = {{1, 2}, {1, 3}, {2, 5}};
      c.gamma_sites = {{1, 2, 3, 4}, {1, 3, 4, 6}, {2, 3, 5, 6}};
      c.partition_primes = odd_primes_up_to(101);
      break;
    case Kind::oracle_report:
      c.n_list = {10, 14, 22, 26};
      c.tuples = {{0, 1}, {0, 2}, {0, 1, 2, 3}, {0, 2, 4, 6}};
      c.restrictions = {Restriction::all, Restriction::y_plus_one, Restriction::y_minus_one, Restriction::y_above_one,
                        Restriction::y_below_minus_one};
      break;
    case Kind::sample_check:
      c.n_list = {10};
      break;
  }
  return c;
}

ExperimentConfig make_config(Kind kind, const ConfigFile& file) {
  ExperimentConfig c = default_config(kind);
  const std::string s = section_of(kind) + ".";
  auto has = [&](const char* k) { return file.has(s + k); };
  auto get = [&](const char* k) { return file.get(s + k); };
  auto num = [&](const char* k) { return parse_double(get(k), s + k); };
  auto integer = [&](const char* k) { return parse_int(get(k), s + k); };

  if (file.has("seed")) c.seed = static_cast<std::uint64_t>(parse_int(file.get("seed"), "seed"));
  if (file.has("out")) c.out_dir = file.get("out");
  if (file.has("threads")) c.threads = static_cast<int>(parse_int(file.get("threads"), "threads"));

  if (has("N")) c.n_list = parse_int_list(get("N"));
  if (has("gamma")) c.gamma = num("gamma");
  if (has("T")) c.horizon = num("T");
  if (has("replicas")) c.replicas = static_cast<int>(integer("replicas"));
  if (has("times")) c.times = parse_double_list(get("times"));
  if (has("phi")) c.phi_ids = split_list(get("phi"));
  if (has("rho0_mean") || has("rho0_cos") || has("rho0_sin")) {
    c.rho0.mean = has("rho0_mean") ? num("rho0_mean") : 0.5;
    std::map<int, FourierProfile::Mode> modes;
    if (has("rho0_cos")) {
      for (auto [k, a] : parse_mode_list(get("rho0_cos"))) {
        modes[k].k = k;
        modes[k].cos_amp = a;
      }
    }
    if (has("rho0_sin")) {
      for (auto [k, a] : parse_mode_list(get("rho0_sin"))) {
        modes[k].k = k;
        modes[k].sin_amp = a;
      }
    }
    c.rho0.modes.clear();
    for (auto& [k, md] : modes) c.rho0.modes.push_back(md);
  }
  if (has("h0_anchor")) c.h0_anchor = num("h0_anchor");
  if (has("M")) c.grid_m = static_cast<int>(integer("M"));
  if (has("dt_safety")) c.dt_safety = num("dt_safety");
  if (has("Y0")) c.y0 = num("Y0");
  if (has("stride")) c.stride = static_cast<int>(integer("stride"));
  if (has("primes")) c.primes = parse_int_list(get("primes"));
  if (has("beta_sites")) c.beta_sites = parse_tuple_list(get("beta_sites"));
  if (has("gamma_sites")) c.gamma_sites = parse_tuple_list(get("gamma_sites"));
  if (has("partition_primes")) c.partition_primes = parse_int_list(get("partition_primes"));
  if (has("partition_gamma")) c.partition_gamma = num("partition_gamma");
  if (has("binom_max")) c.binom_max = static_cast<int>(integer("binom_max"));
  if (has("tuples")) c.tuples = parse_tuple_list(get("tuples"));
  if (has("restrictions")) {
    c.restrictions.clear();
    for (const auto& r : split_list(get("restrictions"))) c.restrictions.push_back(restriction_from_string(r));
  }
  if (has("draws")) c.draws = static_cast<int>(integer("draws"));
  if (has("dyn_replicas")) c.dyn_replicas = static_cast<int>(integer("dyn_replicas"));
  if (has("burn_in")) c.burn_in = num("burn_in");
  if (has("init")) c.init = get("init");
  if (has("grid_points")) c.grid_points = static_cast<int>(integer("grid_points"));
  if (has("ledger")) c.ledger = get("ledger") != "0" && get("ledger") != "false";
  return c;
}

std::vector<std::string> check_hypotheses(const ExperimentConfig& cfg) {
  std::vector<std::string> warnings;
  if (cfg.replicas < 1) throw UsageError("replicas must be at least 1");
  for (int n : cfg.n_list) {
    if (n <= 0 || n % 2) throw UsageError("N must be even and positive (got " + std::to_string(n) + ")");
  }
  if (cfg.kind == Kind::hydro) {
    for (int n : cfg.n_list) {
      if ((n / 2) % 2 == 0) {
        const std::string msg = "hydrodynamic limit requires N = 2n with n odd (hypothesis of the hydrodynamic theorem); N=" +
                                std::to_string(n) + " has n=" + std::to_string(n / 2) + " even";
        if (!cfg.force) throw HypothesisError(msg);
        warnings.push_back(msg + " [forced]");
      }
    }
  }
  if (cfg.kind == Kind::fluct) {
    for (int n : cfg.n_list) {
      if (!is_prime(n / 2)) {
        const std::string msg = "equilibrium fluctuations require N = 2p with p prime; N=" + std::to_string(n) +
                                " has p=" + std::to_string(n / 2) + " composite";
        if (!cfg.force) throw HypothesisError(msg);
        warnings.push_back(msg + " [forced]");
      }
    }
    if (!(cfg.gamma > 6.0 / 7.0)) {
      warnings.push_back("gamma=" + std::to_string(cfg.gamma) + " is not above 6/7; results are flagged");
    }
  }
  return warnings;
}

}  // namespace ifl
