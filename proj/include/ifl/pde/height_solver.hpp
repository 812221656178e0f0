#pragma once

#include <optional>
#include <vector>

namespace ifl {

struct HeightState {
  double t = 0.0;
  std::vector<double> h;
  double y = 0.0;
  bool absorbed = false;
};

struct HeightTrajectory {
  int m = 0;
  std::optional<double> tau0;
  std::vector<HeightState> states;
};

/// d_t h = (1/2) D2 h - (1/2) sgn(Y0) [1 - (D1 h)^2] for t <= tau0, pure heat afterwards,
/// where Y = mean(h) and tau0 is its first zero. Rejects data with max |D1 h| > 1 - slope_margin.
HeightTrajectory solve_height(const std::vector<double>& h0, double horizon, int m, double dt_safety = 0.4,
                              std::vector<double> record_times = {}, double slope_margin = 1e-3);

/// rho = (D1 h + 1) / 2 with the periodic central difference.
std::vector<double> density_from_height(const std::vector<double>& h);

}  // namespace ifl
