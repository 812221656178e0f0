#include "ifl/dynamics/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifl {

double total_rate(const HeightConfig& config) {
  const double n = config.size();
  return n * n * config.num_maxima();
}

PendingFlip draw_flip(const HeightConfig& config, const RateParams& params, RngStream& rng) {
  const int m = config.num_maxima();
  if (m == 0) throw std::logic_error("engine: configuration has no corners");
  PendingFlip next;
  next.wait = rng.exponential(total_rate(config));
  // rates are read from the pre-flip state
  const int s = sign_of(config.integral());
  if (rng.bernoulli(params.p_down(s))) {
    next.direction = FlipDirection::down;
    next.site = config.maxima()[rng.index(static_cast<std::size_t>(m))];
  } else {
    next.direction = FlipDirection::up;
    next.site = config.minima()[rng.index(static_cast<std::size_t>(m))];
  }
  return next;
}

StepResult step(HeightConfig& config, const RateParams& params, RngStream& rng, double clock) {
  const auto next = draw_flip(config, params, rng);
  StepResult r;
  r.event = config.flip(next.site);
  r.wait = next.wait;
  r.clock = clock + next.wait;
  return r;
}

std::vector<double> uniform_grid(double horizon, int points) {
  if (points < 2) throw std::invalid_argument("grid: need at least two points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = horizon * i / (points - 1);
  g.back() = horizon;
  return g;
}

Trajectory simulate(HeightConfig& config, const RateParams& params, double horizon,
                    std::span<Observer* const> observers, RngStream& rng, std::vector<double> grid) {
  if (!(horizon > 0)) throw std::invalid_argument("simulate: horizon must be positive");
  if (config.size() != params.n) throw std::invalid_argument("simulate: configuration size differs from rate N");
  if (grid.empty()) grid = uniform_grid(horizon, 64);
  std::sort(grid.begin(), grid.end());
  if (grid.front() < 0 || grid.back() > horizon) throw std::invalid_argument("simulate: grid outside [0, horizon]");

  Trajectory traj;
  traj.columns = {"t", "Y", "num_maxima"};
  for (auto* obs : observers) {
    for (auto& c : obs->columns()) traj.columns.push_back(c);
  }
  for (auto* obs : observers) obs->start(config, params);

  double clock = 0.0;
  auto pending = draw_flip(config, params, rng);
  double next_time = pending.wait;
  auto record = [&](double t) {
    std::vector<double> row{t, static_cast<double>(config.integral()), static_cast<double>(config.num_maxima())};
    for (auto* obs : observers) {
      try {
        obs->record(t, config, row);
      } catch (const std::exception& e) {
        throw std::runtime_error(std::string("observer failed at t=") + format_double(t) + ": " + e.what());
      }
    }
    traj.rows.push_back(std::move(row));
  };

  auto run_to = [&](double target) {
    while (next_time <= target) {
      const double dt = next_time - clock;
      for (auto* obs : observers) obs->advance(config, dt);
      for (auto* obs : observers) obs->before_flip(config, pending.site, pending.direction);
      const auto event = config.flip(pending.site);
      ++traj.events;
      for (auto* obs : observers) obs->after_flip(config, event);
      clock = next_time;
      pending = draw_flip(config, params, rng);
      next_time = clock + pending.wait;
    }
    if (target > clock) {
      for (auto* obs : observers) obs->advance(config, target - clock);
      clock = target;
    }
  };

  for (double target : grid) {
    run_to(target);
    record(target);
  }
  run_to(horizon);
  return traj;
}

}  // namespace ifl
