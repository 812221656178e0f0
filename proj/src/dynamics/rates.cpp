#include "ifl/dynamics/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace ifl {

RateParams RateParams::make(int n, double gamma) {
  if (n <= 0 || n % 2) throw std::invalid_argument("rates: N must be even and positive");
  if (!(gamma > 0)) throw std::invalid_argument("rates: gamma must be positive");
  return RateParams{n, gamma, std::tanh(std::pow(static_cast<double>(n), -gamma))};
}

RateParams RateParams::symmetric(int n) {
  RateParams r = make(n, 1.0);
  r.gamma = INFINITY;
  r.tanh_term = 0.0;
  return r;
}

std::pair<double, double> rates_for_sign(const RateParams& params, int s) {
  if (s < -1 || s > 1) throw std::invalid_argument("rates: sign must be -1, 0 or 1");
  return {params.p_down(s), params.p_up(s)};
}

}  // namespace ifl
