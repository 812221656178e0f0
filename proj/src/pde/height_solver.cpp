#include "ifl/pde/height_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ifl/core/height_config.hpp"
#include "ifl/pde/coupled_solver.hpp"

namespace ifl {

namespace {

int sgn(double v) { return (v > 0) - (v < 0); }

void height_rhs(const std::vector<double>& h, int s, std::vector<double>& out) {
  const int m = static_cast<int>(h.size());
  const double dx = 1.0 / m;
  out.resize(h.size());
  for (int i = 0; i < m; ++i) {
    const int l = i == 0 ? m - 1 : i - 1;
    const int r = i == m - 1 ? 0 : i + 1;
    const double lap = (h[r] - 2.0 * h[i] + h[l]) / (dx * dx);
    const double grad = (h[r] - h[l]) / (2.0 * dx);
    out[i] = 0.5 * lap - 0.5 * s * (1.0 - grad * grad);
  }
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void heun(const std::vector<double>& h, int s, double dt, std::vector<double>& out) {
  std::vector<double> k1, k2, mid(h.size());
  height_rhs(h, s, k1);
  for (std::size_t i = 0; i < h.size(); ++i) mid[i] = h[i] + dt * k1[i];
  height_rhs(mid, s, k2);
  out.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = h[i] + 0.5 * dt * (k1[i] + k2[i]);
}

}  // namespace

std::vector<double> density_from_height(const std::vector<double>& h) {
  const int m = static_cast<int>(h.size());
  std::vector<double> rho(h.size());
  for (int i = 0; i < m; ++i) {
    const int l = i == 0 ? m - 1 : i - 1;
    const int r = i == m - 1 ? 0 : i + 1;
    rho[i] = 0.5 * ((h[r] - h[l]) * m / 2.0 + 1.0);
  }
  return rho;
}

HeightTrajectory solve_height(const std::vector<double>& h0, double horizon, int m, double dt_safety,
                              std::vector<double> record_times, double slope_margin) {
  if (!(horizon > 0)) throw std::invalid_argument("solve_height: T must be positive");
  if (m < 16 || (m & (m - 1)) != 0) throw std::invalid_argument("solve_height: M must be a power of two >= 16");
  if (static_cast<int>(h0.size()) != m) throw std::invalid_argument("solve_height: h0 has wrong length");
  if (!(dt_safety > 0 && dt_safety <= 1)) throw std::invalid_argument("solve_height: dt_safety must lie in (0,1]");
  for (int i = 0; i < m; ++i) {
    const double grad = (h0[(i + 1) % m] - h0[i]) * m;
    if (std::abs(grad) > 1.0 - slope_margin) {
      throw ValidationError("solve_height: |grad h0| exceeds 1 - margin; outside the smooth regime");
    }
  }
  if (record_times.empty()) record_times = default_record_times(horizon);
  std::sort(record_times.begin(), record_times.end());

  HeightTrajectory traj;
  traj.m = m;
  std::vector<double> h = h0, next;
  const int s0 = sgn(mean_of(h0));
  bool absorbed = s0 == 0;
  if (absorbed) traj.tau0 = 0.0;
  const double dt = dt_safety / (static_cast<double>(m) * m);
  double t = 0.0;
  std::size_t idx = 0;
  auto record = [&]() { traj.states.push_back({t, h, absorbed ? 0.0 : mean_of(h), absorbed}); };
  while (idx < record_times.size() && record_times[idx] <= 0.0) {
    record();
    ++idx;
  }
  while (idx < record_times.size()) {
    const double target = record_times[idx];
    const double step = std::min(dt, target - t);
    const bool lands = step == target - t;
    const int s = absorbed ? 0 : s0;
    heun(h, s, step, next);
    if (!absorbed && sgn(mean_of(next)) != s0) {
      double lo = 0.0, hi = step;
      std::vector<double> trial;
      while (hi - lo > 1e-12 * std::max(1.0, t)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        heun(h, s, mid, trial);
        if (sgn(mean_of(trial)) == s0) lo = mid; else hi = mid;
      }
      heun(h, s, hi, trial);
      // remove the residual mean so that Y is exactly absorbed at 0
      const double residual = mean_of(trial);
      for (double& v : trial) v -= residual;
      h = std::move(trial);
      absorbed = true;
      t += hi;
      traj.tau0 = t;
      if (lands && hi == step) t = target;
    } else {
      h.swap(next);
      t = lands ? target : t + step;
    }
    while (idx < record_times.size() && record_times[idx] <= t) {
      record();
      ++idx;
    }
  }
  return traj;
}

}  // namespace ifl
