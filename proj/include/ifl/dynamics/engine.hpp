#pragma once

#include <span>
#include <string>
#include <vector>

#include "ifl/core/height_config.hpp"
#include "ifl/dynamics/rates.hpp"
#include "ifl/dynamics/rng.hpp"
#include "ifl/dynamics/trajectory.hpp"

namespace ifl {

/// Hooks called by `simulate`. Between events every integrand is constant, so
/// `advance` receives the exact holding time of the current state.
class Observer {
 public:
  virtual ~Observer() = default;
  virtual std::vector<std::string> columns() const = 0;
  virtual void start(const HeightConfig& config, const RateParams& params) = 0;
  virtual void advance(const HeightConfig& config, double dt) = 0;
  virtual void before_flip(const HeightConfig&, Site, FlipDirection) {}
  virtual void after_flip(const HeightConfig& config, const CornerFlip& flip) = 0;
  virtual void record(double t, const HeightConfig& config, std::vector<double>& row) = 0;
};

struct StepResult {
  CornerFlip event;
  double wait = 0.0;
  double clock = 0.0;
};

/// Total jump rate N^2 m in macroscopic time (m = number of maxima).
double total_rate(const HeightConfig& config);

/// Draws the holding time and the next flip without applying it.
struct PendingFlip {
  Site site = 0;
  FlipDirection direction = FlipDirection::down;
  double wait = 0.0;
};
PendingFlip draw_flip(const HeightConfig& config, const RateParams& params, RngStream& rng);

StepResult step(HeightConfig& config, const RateParams& params, RngStream& rng, double clock);

/// Runs the process generated by N^2 L from `config` up to macroscopic time
/// `horizon`. The state at `horizon` is left in `config`. Observers are
/// recorded on `grid` (default: 64 uniform points on [0, horizon]).
Trajectory simulate(HeightConfig& config, const RateParams& params, double horizon,
                    std::span<Observer* const> observers, RngStream& rng, std::vector<double> grid = {});

std::vector<double> uniform_grid(double horizon, int points);

}  // namespace ifl
