#include "ifl/dynamics/ledger.hpp"

#include <cmath>
#include <stdexcept>

namespace ifl {

MartingaleLedger::MartingaleLedger(std::vector<TestFunction> phis) : phis_(std::move(phis)) {}

std::vector<std::string> MartingaleLedger::columns() const {
  std::vector<std::string> cols;
  for (const auto& phi : phis_) {
    for (const char* name : {"U", "K", "B", "M", "QV", "P", "KP", "BP", "MP", "QVP"}) {
      cols.push_back(std::string(name) + "_" + phi.id());
    }
  }
  for (const char* name : {"Yn", "X", "QVX"}) cols.emplace_back(name);
  return cols;
}

double MartingaleLedger::u_of(const Field& f) const {
  double phi_sum = 0;
  for (double v : f.phi) phi_sum += v;
  return (f.s_phi - 0.5 * phi_sum) / sqrt_n_;
}

double MartingaleLedger::p_of(const Field& f) const { return f.s_phi / n_; }

void MartingaleLedger::rebuild(const HeightConfig& config) {
  const auto xi = config.site_slopes();
  for (auto& f : fields_) {
    f.s_phi = f.s_lap = f.s_cov = f.s_sq = f.q_sq = f.q_lin = 0;
    for (int x = 0; x < n_; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      const double a = xi[ux];
      const double b = xi[static_cast<std::size_t>((x + 1) % n_)];
      f.s_phi += a * f.phi[ux];
      f.s_lap += a * f.lap[ux];
      f.s_cov += f.grad[ux] * (a - 0.5) * (b - 0.5);
      f.s_sq += f.grad[ux] * (a - b) * (a - b);
      f.q_sq += f.grad_sq[ux] * (a - b) * (a - b);
      f.q_lin += f.grad_sq[ux] * (a - b);
    }
  }
  maxima_ = config.num_maxima();
  y_ = config.integral();
  sign_ = sign_of(y_);
}

void MartingaleLedger::start(const HeightConfig& config, const RateParams& params) {
  n_ = config.size();
  tanh_ = params.tanh_term;
  sqrt_n_ = std::sqrt(static_cast<double>(n_));
  fields_.assign(phis_.size(), Field{});
  for (std::size_t i = 0; i < phis_.size(); ++i) {
    auto& f = fields_[i];
    const auto& phi = phis_[i];
    f.phi.resize(static_cast<std::size_t>(n_));
    f.grad.resize(static_cast<std::size_t>(n_));
    f.lap.resize(static_cast<std::size_t>(n_));
    f.grad_sq.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      f.phi[ux] = phi(static_cast<double>(x) / n_);
      f.grad[ux] = phi.grad(x, n_);
      f.lap[ux] = phi.laplacian(x, n_);
      f.grad_sq[ux] = f.grad[ux] * f.grad[ux];
      f.lap_sum += f.lap[ux];
    }
  }
  rebuild(config);
  for (auto& f : fields_) {
    f.u0 = u_of(f);
    f.p0 = p_of(f);
  }
  y0_ = y_;
  drift_x_ = qv_x_ = 0;
  x_history_.clear();
}

void MartingaleLedger::advance(const HeightConfig&, double dt) {
  const double s = sign_;
  for (auto& f : fields_) {
    const double k_rate = (f.s_lap - 0.5 * f.lap_sum) / (2.0 * sqrt_n_);
    f.k += k_rate * dt;
    f.kp += f.s_lap / (2.0 * n_) * dt;
    f.b += -sqrt_n_ * tanh_ * s * f.s_cov * dt;
    f.bp += 0.5 * tanh_ * s * f.s_sq * dt;
    f.qv += (0.5 * f.q_sq + 0.5 * tanh_ * s * f.q_lin) / n_ * dt;
  }
  const double bonds = 2.0 * maxima_;
  drift_x_ += tanh_ * s * bonds * dt;
  qv_x_ += 2.0 * bonds / (static_cast<double>(n_) * n_) * dt;
}

void MartingaleLedger::bond_terms(const HeightConfig& config, Site x, double sign) {
  const auto ux = static_cast<std::size_t>(((x % n_) + n_) % n_);
  const double a = config.slope(x);
  const double b = config.slope(x + 1);
  for (auto& f : fields_) {
    f.s_cov += sign * f.grad[ux] * (a - 0.5) * (b - 0.5);
    f.s_sq += sign * f.grad[ux] * (a - b) * (a - b);
    f.q_sq += sign * f.grad_sq[ux] * (a - b) * (a - b);
    f.q_lin += sign * f.grad_sq[ux] * (a - b);
  }
}

void MartingaleLedger::before_flip(const HeightConfig& config, Site x, FlipDirection) {
  for (Site y = x - 1; y <= x + 1; ++y) bond_terms(config, y, -1.0);
  for (auto& f : fields_) {
    for (Site y = x; y <= x + 1; ++y) {
      const auto uy = static_cast<std::size_t>(y % n_);
      const double a = config.slope(y);
      f.s_phi -= a * f.phi[uy];
      f.s_lap -= a * f.lap[uy];
    }
  }
}

void MartingaleLedger::after_flip(const HeightConfig& config, const CornerFlip& flip) {
  const Site x = flip.site;
  for (Site y = x - 1; y <= x + 1; ++y) bond_terms(config, y, 1.0);
  for (auto& f : fields_) {
    for (Site y = x; y <= x + 1; ++y) {
      const auto uy = static_cast<std::size_t>(y % n_);
      const double a = config.slope(y);
      f.s_phi += a * f.phi[uy];
      f.s_lap += a * f.lap[uy];
    }
  }
  maxima_ = config.num_maxima();
  y_ = config.integral();
  sign_ = sign_of(y_);
}

MartingaleLedger::Terms MartingaleLedger::terms(std::size_t i) const {
  const auto& f = fields_.at(i);
  Terms t;
  t.u = u_of(f);
  t.k = f.k;
  t.b = f.b;
  t.m = t.u - f.u0 - t.k - t.b;
  t.qv = f.qv;
  t.p = p_of(f);
  t.kp = f.kp;
  t.bp = f.bp;
  t.mp = t.p - f.p0 - t.kp - t.bp;
  t.qvp = f.qv / n_;
  return t;
}

void MartingaleLedger::record(double t, const HeightConfig& config, std::vector<double>& row) {
  // resynchronise the maintained sums so rounding does not accumulate over long runs
  rebuild(config);
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    const auto v = terms(i);
    for (double x : {v.u, v.k, v.b, v.m, v.qv, v.p, v.kp, v.bp, v.mp, v.qvp}) row.push_back(x);
  }
  const double nn = static_cast<double>(n_) * n_;
  const double yn = static_cast<double>(y_) / nn;
  const double x = static_cast<double>(y_ - y0_) / nn + drift_x_;
  row.push_back(yn);
  row.push_back(x);
  row.push_back(qv_x_);
  x_history_[t] = {x, qv_x_};
}

std::pair<double, double> MartingaleLedger::integral_martingale(double t) const {
  auto it = x_history_.find(t);
  if (it == x_history_.end()) {
    throw std::out_of_range("integral_martingale: t is not a recorded time within the horizon");
  }
  return it->second;
}

double MartingaleLedger::integrand_discrepancy(const HeightConfig& config) const {
  MartingaleLedger fresh(phis_);
  fresh.n_ = n_;
  fresh.sqrt_n_ = sqrt_n_;
  fresh.fields_ = fields_;
  fresh.rebuild(config);
  double worst = std::abs(fresh.maxima_ - maxima_) + std::abs(static_cast<double>(fresh.y_ - y_));
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    const auto& a = fields_[i];
    const auto& b = fresh.fields_[i];
    for (double d : {a.s_phi - b.s_phi, a.s_lap - b.s_lap, a.s_cov - b.s_cov, a.s_sq - b.s_sq, a.q_sq - b.q_sq,
                     a.q_lin - b.q_lin}) {
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

}  // namespace ifl
