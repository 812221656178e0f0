#pragma once

#include <optional>
#include <vector>

namespace ifl {

struct PdeState {
  double t = 0.0;
  std::vector<double> rho;
  double y = 0.0;
  bool absorbed = false;
};

struct PdeTrajectory {
  int m = 0;
  double y0 = 0.0;
  double dt_safety = 0.4;
  std::optional<double> tau0;
  std::vector<PdeState> states;
  int rejected_steps = 0;
  long long steps = 0;
  /// max over recorded times of |mass(t) - mass(0)| / max(t, 1).
  double mass_drift_rate = 0.0;

  const PdeState& at_time(double t) const;
};

/// Observation times {0.05 k : k = 0..20} * T.
std::vector<double> default_record_times(double horizon);

/// Method of lines for
///   d_t rho = (1/2) D2 rho - s D1[rho (1 - rho)],   Y' = -2 s mean(rho (1 - rho)),
/// s = sgn(Y) until Y reaches 0, after which Y = 0 and s = 0 for good.
/// Periodic central differences, Heun steps with dt = dt_safety dx^2.
PdeTrajectory solve_coupled(const std::vector<double>& rho0, double y0, double horizon, int m,
                            double dt_safety = 0.4, std::vector<double> record_times = {});

}  // namespace ifl
