#include "ifl/harness/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace ifl {

Summary summarize(const std::vector<double>& values) {
  Summary s;
  s.count = static_cast<int>(values.size());
  if (s.count == 0) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / s.count;
  if (s.count < 2) return s;
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  s.variance = m2 / (s.count - 1);
  s.mean_stderr = std::sqrt(s.variance / s.count);
  const double pop2 = m2 / s.count;
  const double pop4 = m4 / s.count;
  s.variance_stderr = std::sqrt(std::max(pop4 - pop2 * pop2, 0.0) / s.count);
  return s;
}

StatRecord make_record(std::string name, double value, double stderr_, int replicas, double theory, double abs_tol,
                       double z) {
  StatRecord r{std::move(name), value, stderr_, replicas, theory, abs_tol, z, false};
  r.pass = std::abs(value - theory) <= std::max(abs_tol, z * stderr_);
  return r;
}

namespace {

double upper_tail(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquare chi_square_gof(const std::vector<double>& observed, const std::vector<double>& probabilities,
                         double min_expected) {
  if (observed.size() != probabilities.size()) throw std::invalid_argument("chi-square: size mismatch");
  const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
  double pooled_obs = 0.0, pooled_exp = 0.0;
  ChiSquare out;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = probabilities[i] * total;
    if (e < min_expected) {
      pooled_obs += observed[i];
      pooled_exp += e;
      continue;
    }
    out.statistic += (observed[i] - e) * (observed[i] - e) / e;
    ++cells;
  }
  if (pooled_exp > 0) {
    out.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++cells;
  }
  out.dof = cells - 1;
  out.p_value = upper_tail(out.statistic, out.dof);
  return out;
}

ChiSquare chi_square_two_sample(const std::vector<double>& a, const std::vector<double>& b, double min_expected) {
  if (a.size() != b.size()) throw std::invalid_argument("chi-square: size mismatch");
  const double na = std::accumulate(a.begin(), a.end(), 0.0);
  const double nb = std::accumulate(b.begin(), b.end(), 0.0);
  const double total = na + nb;
  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> pooled{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double row = a[i] + b[i];
    if (row * std::min(na, nb) / total < min_expected) {
      pooled.first += a[i];
      pooled.second += b[i];
    } else {
      cells.emplace_back(a[i], b[i]);
    }
  }
  if (pooled.first + pooled.second > 0) cells.push_back(pooled);
  ChiSquare out;
  for (auto [x, y] : cells) {
    const double row = x + y;
    const double ea = row * na / total;
    const double eb = row * nb / total;
    if (ea > 0) out.statistic += (x - ea) * (x - ea) / ea;
    if (eb > 0) out.statistic += (y - eb) * (y - eb) / eb;
  }
  out.dof = static_cast<int>(cells.size()) - 1;
  out.p_value = upper_tail(out.statistic, out.dof);
  return out;
}

}  // namespace ifl
