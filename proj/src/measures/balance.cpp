#include "ifl/measures/balance.hpp"

#include <algorithm>
#include <cmath>

#include "ifl/dynamics/rates.hpp"

namespace ifl {

double balance_check(int n, double gamma, const HeightConfig& config, Site x) {
  if (config.slope(x) == config.slope(x + 1)) return 0.0;
  const auto rates = RateParams::make(n, gamma);
  const double lambda = std::pow(static_cast<double>(n), -gamma);
  auto weight = [&](std::int64_t y) { return std::exp(-lambda * std::abs(static_cast<double>(y))); };
  auto rate = [&](const HeightConfig& h, Site site) {
    const int s = sign_of(h.integral());
    return h.is_maximum(site) ? rates.p_down(s) : rates.p_up(s);
  };
  const HeightConfig flipped = apply_flip(config, x);
  const double forward = rate(config, x) * weight(config.integral());
  const double backward = rate(flipped, x) * weight(flipped.integral());
  const double scale = std::max(forward, backward);
  return scale == 0.0 ? 0.0 : std::abs(forward - backward) / scale;
}

int anchor_window(int n, double gamma, double tail) {
  const double lambda = std::pow(static_cast<double>(n), -gamma);
  // mass beyond anchor A on one side is at most q^A / (1 - q) relative to the anchor-0 term
  const double q = std::exp(-lambda * n);
  const double one_minus_q = -std::expm1(-lambda * n);
  const double a = std::log(tail * one_minus_q / 2.0) / std::log(q);
  return static_cast<int>(std::ceil(a)) + n + 1;
}

}  // namespace ifl
