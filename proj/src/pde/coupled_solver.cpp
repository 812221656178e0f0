#include "ifl/pde/coupled_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ifl {

namespace {

constexpr double range_tolerance = 1e-12;

int sgn(double v) { return (v > 0) - (v < 0); }

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

class Stepper {
 public:
  explicit Stepper(int m) : m_(m), dx_(1.0 / m), k1_(m), k2_(m), mid_(m), flux_(m) {}

  void rhs(const std::vector<double>& rho, int s, std::vector<double>& out) {
    const double inv_dx2 = 1.0 / (dx_ * dx_);
    const double inv_2dx = 1.0 / (2.0 * dx_);
    for (int i = 0; i < m_; ++i) flux_[i] = rho[i] * (1.0 - rho[i]);
    for (int i = 0; i < m_; ++i) {
      const int l = i == 0 ? m_ - 1 : i - 1;
      const int r = i == m_ - 1 ? 0 : i + 1;
      out[i] = 0.5 * (rho[r] - 2.0 * rho[i] + rho[l]) * inv_dx2 - s * (flux_[r] - flux_[l]) * inv_2dx;
    }
  }

  double y_rate(const std::vector<double>& rho, int s) {
    if (s == 0) return 0.0;
    double acc = 0.0;
    for (double v : rho) acc += v * (1.0 - v);
    return -2.0 * s * acc / m_;
  }

  void heun(const std::vector<double>& rho, double y, int s, double h, std::vector<double>& rho_out, double& y_out) {
    rhs(rho, s, k1_);
    const double g1 = y_rate(rho, s);
    for (int i = 0; i < m_; ++i) mid_[i] = rho[i] + h * k1_[i];
    rhs(mid_, s, k2_);
    const double g2 = y_rate(mid_, s);
    rho_out.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) rho_out[i] = rho[i] + 0.5 * h * (k1_[i] + k2_[i]);
    y_out = y + 0.5 * h * (g1 + g2);
  }

 private:
  int m_;
  double dx_;
  std::vector<double> k1_, k2_, mid_, flux_;
};

bool in_range(const std::vector<double>& rho) {
  for (double v : rho) {
    if (v < -range_tolerance || v > 1.0 + range_tolerance) return false;
  }
  return true;
}

}  // namespace

const PdeState& PdeTrajectory::at_time(double t) const {
  for (const auto& s : states) {
    if (std::abs(s.t - t) <= 1e-12 * std::max(1.0, std::abs(t))) return s;
  }
  throw std::out_of_range("pde trajectory: time not recorded");
}

std::vector<double> default_record_times(double horizon) {
  std::vector<double> times;
  for (int k = 0; k <= 20; ++k) times.push_back(horizon * k / 20.0);
  times.back() = horizon;
  return times;
}

PdeTrajectory solve_coupled(const std::vector<double>& rho0, double y0, double horizon, int m, double dt_safety,
                            std::vector<double> record_times) {
  if (!(horizon > 0)) throw std::invalid_argument("solve_coupled: T must be positive");
  if (m < 16 || (m & (m - 1)) != 0) throw std::invalid_argument("solve_coupled: M must be a power of two >= 16");
  if (static_cast<int>(rho0.size()) != m) throw std::invalid_argument("solve_coupled: rho0 has wrong length");
  if (!(dt_safety > 0 && dt_safety <= 1)) throw std::invalid_argument("solve_coupled: dt_safety must lie in (0,1]");
  if (!in_range(rho0)) throw std::invalid_argument("solve_coupled: rho0 outside [0,1]");
  if (record_times.empty()) record_times = default_record_times(horizon);
  std::sort(record_times.begin(), record_times.end());

  PdeTrajectory traj;
  traj.m = m;
  traj.y0 = y0;
  traj.dt_safety = dt_safety;

  Stepper stepper(m);
  std::vector<double> rho = rho0, next;
  double y = y0;
  bool absorbed = y0 == 0.0;
  if (absorbed) traj.tau0 = 0.0;
  double t = 0.0;
  const double dx = 1.0 / m;
  const double dt = dt_safety * dx * dx;
  const double mass0 = mean_of(rho0);

  auto record = [&]() {
    traj.states.push_back({t, rho, y, absorbed});
    traj.mass_drift_rate = std::max(traj.mass_drift_rate, std::abs(mean_of(rho) - mass0) / std::max(t, 1.0));
  };

  std::size_t next_record = 0;
  while (next_record < record_times.size() && record_times[next_record] <= 0.0) {
    record();
    ++next_record;
  }
  while (next_record < record_times.size()) {
    const double target = record_times[next_record];
    double h = std::min(dt, target - t);
    const bool lands = h == target - t;
    const int s = absorbed ? 0 : sgn(y);
    double y_new = 0.0;
    int halvings = 0;
    for (;;) {
      stepper.heun(rho, y, s, h, next, y_new);
      if (in_range(next)) break;
      if (++halvings > 40) {
        throw std::runtime_error("solve_coupled: density left [0,1] at t=" + std::to_string(t) +
                                 " even with dt reduced 2^40-fold");
      }
      ++traj.rejected_steps;
      h *= 0.5;
    }
    ++traj.steps;
    const bool full_step = halvings == 0 && lands;
    if (!absorbed && sgn(y_new) != s) {
      // locate the zero of Y inside the step
      double lo = 0.0, hi = h;
      std::vector<double> trial;
      double y_trial = 0.0;
      while (hi - lo > 1e-12 * std::max(1.0, t) && hi - lo > 1e-300) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        stepper.heun(rho, y, s, mid, trial, y_trial);
        if (sgn(y_trial) == s) lo = mid; else hi = mid;
      }
      stepper.heun(rho, y, s, hi, trial, y_trial);
      rho = std::move(trial);
      y = 0.0;
      absorbed = true;
      t += hi;
      traj.tau0 = t;
      if (full_step && hi == h) t = target;
    } else {
      rho.swap(next);
      y = y_new;
      t = full_step ? target : t + h;
    }
    while (next_record < record_times.size() && record_times[next_record] <= t) {
      record();
      ++next_record;
    }
  }
  return traj;
}

}  // namespace ifl
