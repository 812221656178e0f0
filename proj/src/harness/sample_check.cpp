#include <cmath>

#include <json.hpp>

#include "ifl/dynamics/engine.hpp"
#include "ifl/harness/experiments.hpp"
#include "ifl/harness/output.hpp"
#include "ifl/harness/runs.hpp"
#include "ifl/measures/samplers.hpp"
#include "ifl/oracle/moments.hpp"

namespace ifl {

namespace {

// cells: Y in [-L, L], then one cell for |Y| > L
struct YHistogram {
  std::int64_t limit;
  std::vector<double> counts;
  explicit YHistogram(std::int64_t l) : limit(l), counts(static_cast<std::size_t>(2 * l + 2), 0.0) {}
  void add(std::int64_t y) {
    if (std::abs(y) > limit) {
      counts.back() += 1;
    } else {
      counts[static_cast<std::size_t>(y + limit)] += 1;
    }
  }
};

double product01(const HeightConfig& c) { return (c.slope(0) - 0.5) * (c.slope(1) - 0.5); }

struct Draws {
  YHistogram y;
  std::vector<double> two_point;
};

}  // namespace

SampleCheckResult run_sample_check(const ExperimentConfig& cfg) {
  check_hypotheses(cfg);
  if (cfg.n_list.empty()) throw UsageError("sample.N is empty");
  SampleCheckResult res;
  res.n = cfg.n_list.front();
  res.gamma = cfg.gamma;
  const int n = res.n;
  if (n > ExactMeasure::max_size) throw UsageError("sample-check needs the exact measure; N must be at most 26");

  const ExactMeasure measure(n, cfg.gamma);
  const std::int64_t limit = static_cast<std::int64_t>(std::ceil(40.0 * std::pow(n, cfg.gamma))) + n * n;
  std::vector<double> probs(static_cast<std::size_t>(2 * limit + 2), 0.0);
  double inside = 0;
  for (const auto& [y, p] : measure.y_law(limit)) {
    probs[static_cast<std::size_t>(y + limit)] = p;
    inside += p;
  }
  probs.back() = std::max(0.0, 1.0 - inside);
  res.oracle_two_point = two_point_function(measure)[1];

  const InvariantSampler sampler(n, cfg.gamma);
  const auto params = RateParams::make(n, cfg.gamma);

  auto run = [&](int count, std::uint64_t tag, auto&& body) {
    std::vector<HeightConfig> out(static_cast<std::size_t>(count));
    parallel_for(count, cfg.threads, [&](int i) {
      RngStream rng(cfg.seed, stream_id(Kind::sample_check, static_cast<int>(tag), static_cast<std::uint64_t>(i)));
      out[static_cast<std::size_t>(i)] = body(rng);
    });
    return out;
  };
  auto tally = [&](const std::vector<HeightConfig>& configs) {
    Draws d{YHistogram(limit), {}};
    for (const auto& c : configs) {
      d.y.add(c.integral());
      d.two_point.push_back(product01(c));
    }
    return d;
  };
  auto evolve = [&](HeightConfig c, double horizon, RngStream& rng) {
    simulate(c, params, horizon, std::span<Observer* const>{}, rng, {horizon});
    return c;
  };

  const auto exact = tally(run(cfg.draws, 0, [&](RngStream& rng) { return sampler.sample(rng); }));
  const auto dynamic = tally(run(cfg.dyn_replicas, 1, [&](RngStream& rng) {
    return evolve(HeightConfig::zigzag(n, 0), cfg.burn_in, rng);
  }));
  std::vector<HeightConfig> starts, ends;
  {
    std::vector<std::pair<HeightConfig, HeightConfig>> pairs(static_cast<std::size_t>(cfg.dyn_replicas));
    parallel_for(cfg.dyn_replicas, cfg.threads, [&](int i) {
      RngStream rng(cfg.seed, stream_id(Kind::sample_check, 2, static_cast<std::uint64_t>(i)));
      auto start = sampler.sample(rng);
      pairs[static_cast<std::size_t>(i)] = {start, evolve(start, 1.0, rng)};
    });
    for (auto& [a, b] : pairs) {
      starts.push_back(std::move(a));
      ends.push_back(std::move(b));
    }
  }
  const auto start = tally(starts);
  const auto end = tally(ends);

  res.exact_vs_law = chi_square_gof(exact.y.counts, probs);
  res.dynamics_vs_exact = chi_square_two_sample(dynamic.y.counts, exact.y.counts);
  res.stationary_vs_start = chi_square_two_sample(end.y.counts, start.y.counts);
  res.exact_two_point = summarize(exact.two_point);
  res.dynamics_two_point = summarize(dynamic.two_point);
  res.stationary_two_point_start = summarize(start.two_point);
  res.stationary_two_point_end = summarize(end.two_point);

  auto within = [](const Summary& a, double b, double se_b) {
    return std::abs(a.mean - b) <= 3.0 * std::hypot(a.mean_stderr, se_b);
  };
  res.two_point_pass = within(res.exact_two_point, res.oracle_two_point, 0.0) &&
                       within(res.dynamics_two_point, res.exact_two_point.mean, res.exact_two_point.mean_stderr);
  res.stationary_two_point_pass = within(res.stationary_two_point_end, res.oracle_two_point, 0.0);
  const double alpha = 1e-3;
  res.pass = res.exact_vs_law.p_value > alpha && res.dynamics_vs_exact.p_value > alpha &&
             res.stationary_vs_start.p_value > alpha && res.two_point_pass && res.stationary_two_point_pass;
  return res;
}

std::vector<std::string> write_sample_check(const SampleCheckResult& r, const ExperimentConfig& cfg) {
  auto chi = [](const ChiSquare& c) {
    return nlohmann::ordered_json{{"statistic", c.statistic}, {"dof", c.dof}, {"p_value", c.p_value}};
  };
  auto summary = [](const Summary& s) {
    return nlohmann::ordered_json{{"mean", s.mean}, {"stderr", s.mean_stderr}, {"count", s.count}};
  };
  nlohmann::ordered_json j;
  j["N"] = r.n;
  j["gamma"] = r.gamma;
  j["draws"] = cfg.draws;
  j["dyn_replicas"] = cfg.dyn_replicas;
  j["burn_in"] = cfg.burn_in;
  j["exact_vs_law"] = chi(r.exact_vs_law);
  j["dynamics_vs_exact"] = chi(r.dynamics_vs_exact);
  j["stationary_vs_start"] = chi(r.stationary_vs_start);
  j["two_point_oracle"] = r.oracle_two_point;
  j["two_point_exact"] = summary(r.exact_two_point);
  j["two_point_dynamics"] = summary(r.dynamics_two_point);
  j["two_point_stationary_start"] = summary(r.stationary_two_point_start);
  j["two_point_stationary_end"] = summary(r.stationary_two_point_end);
  j["two_point_pass"] = r.two_point_pass;
  j["stationary_two_point_pass"] = r.stationary_two_point_pass;
  j["pass"] = r.pass;
  const auto path = output_path(cfg.out_dir, "sample_check.json");
  write_atomic(path, j.dump(2) + "\n");
  return {path};
}

}  // namespace ifl
