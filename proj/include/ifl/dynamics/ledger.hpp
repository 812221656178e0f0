#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ifl/core/test_function.hpp"
#include "ifl/dynamics/engine.hpp"

namespace ifl {

/// Dynkin decompositions accumulated exactly along a path.
///
/// Fluctuation field, per test function phi:
///   U  = N^{-1/2} sum_x xibar(x) phi(x/N)
///   K  = int (1/(2 sqrt N)) sum_x Lap_N phi(x/N) xibar(x)
///   B  = -int sqrt(N) tanh sgn(Y) sum_x Grad_N phi(x/N) xibar(x) xibar(x+1)
///   QV = int (1/N) sum_x Grad_N phi(x/N)^2 eta(x),
///        eta(x) = (xi(x)-xi(x+1))^2 / 2 + tanh sgn(Y) (xi(x)-xi(x+1)) / 2
///   M  = U_t - U_0 - K - B
/// Density pairing P = <pi, phi> with
///   KP = int <pi, Lap_N phi / 2>,  BP = int (tanh/2) sgn(Y) sum_x Grad_N phi (xi(x)-xi(x+1))^2,
///   QVP = QV / N,  MP = P_t - P_0 - KP - BP.
/// Integral process, Yn = Y / N^2:
///   X = Yn_t - Yn_0 + int tanh sgn(Y) sum_x (xi(x)-xi(x+1))^2,  QVX = int (2/N^2) sum_x (xi(x)-xi(x+1))^2.
/// The tanh term is the one of the simulated rates.
class MartingaleLedger : public Observer {
 public:
  explicit MartingaleLedger(std::vector<TestFunction> phis);

  std::vector<std::string> columns() const override;
  void start(const HeightConfig& config, const RateParams& params) override;
  void advance(const HeightConfig& config, double dt) override;
  void before_flip(const HeightConfig& config, Site x, FlipDirection dir) override;
  void after_flip(const HeightConfig& config, const CornerFlip& flip) override;
  void record(double t, const HeightConfig& config, std::vector<double>& row) override;

  struct Terms {
    double u = 0, k = 0, b = 0, m = 0, qv = 0;
    double p = 0, kp = 0, bp = 0, mp = 0, qvp = 0;
  };
  Terms terms(std::size_t phi_index) const;
  /// (X_t, QV_t) of the integral process at a recorded grid time.
  std::pair<double, double> integral_martingale(double t) const;
  /// Maintained integrands against a from-scratch recomputation.
  double integrand_discrepancy(const HeightConfig& config) const;

  const std::vector<TestFunction>& test_functions() const { return phis_; }

 private:
  struct Field {
    std::vector<double> phi, grad, lap, grad_sq;
    double lap_sum = 0;
    // maintained sums
    double s_phi = 0;   // sum xi phi
    double s_lap = 0;   // sum xi lap
    double s_cov = 0;   // sum grad xibar(x) xibar(x+1)
    double s_sq = 0;    // sum grad (xi(x)-xi(x+1))^2
    double q_sq = 0;    // sum grad^2 (xi(x)-xi(x+1))^2
    double q_lin = 0;   // sum grad^2 (xi(x)-xi(x+1))
    // integrals
    double k = 0, b = 0, qv = 0, kp = 0, bp = 0;
    double u0 = 0, p0 = 0;
  };

  void rebuild(const HeightConfig& config);
  void bond_terms(const HeightConfig& config, Site x, double sign);
  double u_of(const Field& f) const;
  double p_of(const Field& f) const;

  std::vector<TestFunction> phis_;
  std::vector<Field> fields_;
  int n_ = 0;
  double tanh_ = 0;
  double sqrt_n_ = 1;
  int sign_ = 0;
  int maxima_ = 0;
  std::int64_t y0_ = 0;
  std::int64_t y_ = 0;
  double drift_x_ = 0;
  double qv_x_ = 0;
  std::map<double, std::pair<double, double>> x_history_;
};

}  // namespace ifl
