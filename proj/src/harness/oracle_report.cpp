#include <algorithm>
#include <cmath>
#include <map>

#include "ifl/dynamics/trajectory.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"
#include "ifl/oracle/moments.hpp"

namespace ifl {

namespace {

double moment_scale(int n, double gamma, int m, Restriction r) {
  const bool level = r == Restriction::y_plus_one || r == Restriction::y_minus_one;
  return std::pow(static_cast<double>(n), m + (level ? gamma : 0.0));
}

std::string sites_text(const std::vector<int>& sites) {
  std::string s;
  for (std::size_t i = 0; i < sites.size(); ++i) s += (i ? ":" : "") + std::to_string(sites[i]);
  return s;
}

}  // namespace

OracleResult run_oracle_report(const ExperimentConfig& cfg) {
  check_hypotheses(cfg);
  OracleResult result;
  std::vector<int> sizes = cfg.n_list;
  std::sort(sizes.begin(), sizes.end());
  for (int n : sizes) {
    if (n > ExactMeasure::max_size) {
      throw UsageError("oracle-report enumerates the exact measure; N=" + std::to_string(n) + " exceeds " +
                       std::to_string(ExactMeasure::max_size));
    }
  }
  std::vector<std::string> phi_ids = cfg.phi_ids;
  if (phi_ids.empty()) phi_ids = {"one", "cos1", "sin1"};

  for (int n : sizes) {
    const ExactMeasure measure(n, cfg.gamma);
    for (const auto& tuple : cfg.tuples) {
      for (int s : tuple) {
        if (s < 0 || s >= n) throw UsageError("oracle tuple site " + std::to_string(s) + " outside the torus");
      }
      for (auto r : cfg.restrictions) {
        const auto res = moment(measure, {n, cfg.gamma, tuple, r});
        const int m = static_cast<int>(tuple.size()) / 2;
        MomentRow row{n, cfg.gamma, r, tuple, m, res.value, 0.0, true};
        row.scaled_value = moment_scale(n, cfg.gamma, m, r) * res.value;
        result.moments.push_back(std::move(row));
      }
    }
    const auto c = two_point_function(measure);
    for (int d = 0; d < n; ++d) result.two_point.emplace_back(n, d, n * c[static_cast<std::size_t>(d)]);
    for (const auto& id : phi_ids) {
      const auto phi = TestFunction::from_id(id);
      const double mean = discrete_mean(phi, n);
      const double limit = 0.25 * (discrete_l2_sq(phi, n) - mean * mean);
      result.variance.emplace_back(n, id, fluct_variance_exact(measure, phi), limit);
    }
    result.measure_json.push_back(exact_measure_json(measure, 4 * n));
  }

  // growth check at the largest N against the smaller ones
  if (sizes.size() > 1) {
    const int largest = sizes.back();
    std::map<std::pair<std::string, Restriction>, double> smaller_max;
    for (const auto& row : result.moments) {
      if (row.n == largest) continue;
      auto& v = smaller_max[{sites_text(row.sites), row.restriction}];
      v = std::max(v, std::abs(row.scaled_value));
    }
    for (auto& row : result.moments) {
      if (row.n != largest) continue;
      row.bound_pass = std::abs(row.scaled_value) <= 1.2 * smaller_max[{sites_text(row.sites), row.restriction}] + 1e-12;
      if (!row.bound_pass) result.all_pass = false;
    }
  }
  for (const auto& [n, id, var, limit] : result.variance) {
    if (std::abs(var - limit) > 3.0 / n) result.all_pass = false;
  }
  return result;
}

std::vector<std::string> write_oracle_report(const OracleResult& result, const ExperimentConfig& cfg) {
  std::vector<std::string> paths;
  CsvBuilder moments({"N", "gamma", "restriction", "sites", "m", "value", "scaled_value", "bound_pass"});
  for (const auto& r : result.moments) {
    moments.cell(r.n).cell(r.gamma).cell(to_string(r.restriction)).cell(sites_text(r.sites)).cell(r.m);
    moments.cell(r.value).cell(r.scaled_value).cell(r.bound_pass);
    moments.end_row();
  }
  paths.push_back(output_path(cfg.out_dir, "moments.csv"));
  write_atomic(paths.back(), moments.str());

  CsvBuilder two({"N", "d", "N_c"});
  for (const auto& [n, d, v] : result.two_point) two.cell(n).cell(d).cell(v).end_row();
  paths.push_back(output_path(cfg.out_dir, "two_point.csv"));
  write_atomic(paths.back(), two.str());

  CsvBuilder var({"N", "phi_id", "variance", "limit"});
  for (const auto& [n, id, v, l] : result.variance) var.cell(n).cell(id).cell(v).cell(l).end_row();
  paths.push_back(output_path(cfg.out_dir, "variance.csv"));
  write_atomic(paths.back(), var.str());

  std::string jsonl;
  for (const auto& line : result.measure_json) jsonl += line + "\n";
  paths.push_back(output_path(cfg.out_dir, "exact_measure.jsonl"));
  write_atomic(paths.back(), jsonl);
  return paths;
}

}  // namespace ifl
