#include "ifl/measures/exact_measure.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace ifl {

std::string to_string(Restriction r) {
  switch (r) {
    case Restriction::all:
      return "all";
    case Restriction::y_plus_one:
      return "Y=+1";
    case Restriction::y_minus_one:
      return "Y=-1";
    case Restriction::y_above_one:
      return "Y>1";
    case Restriction::y_below_minus_one:
      return "Y<-1";
  }
  return "?";
}

Restriction restriction_from_string(const std::string& s) {
  for (auto r : {Restriction::all, Restriction::y_plus_one, Restriction::y_minus_one, Restriction::y_above_one,
                 Restriction::y_below_minus_one}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown restriction '" + s + "'");
}

ExactMeasure::ExactMeasure(int n, double gamma) : n_(n), gamma_(gamma) {
  if (n <= 0 || n % 2) throw ValidationError("exact measure: N must be even and positive");
  if (n > max_size) {
    throw ValidationError("exact measure: N=" + std::to_string(n) + " exceeds the enumeration bound " +
                          std::to_string(max_size) + "; use sample_invariant for larger N");
  }
  if (!(gamma > 0)) throw ValidationError("exact measure: gamma must be positive");
  lambda_ = std::pow(static_cast<double>(n), -gamma);
  counts_.assign(static_cast<std::size_t>(n), 0);
  const int p = n / 2;
  std::uint32_t mask = (std::uint32_t{1} << p) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<std::uint8_t> xi(static_cast<std::size_t>(n));
  while (mask < limit) {
    for (int x = 0; x < n; ++x) xi[static_cast<std::size_t>(x)] = (mask >> x) & 1U;
    const auto y = static_cast<std::int32_t>(ifl::base_integral(xi));
    masks_.push_back(mask);
    base_.push_back(y);
    ++counts_[static_cast<std::size_t>(((y % n) + n) % n)];
    // next mask with the same popcount
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t ripple = mask + low;
    mask = ripple | (((ripple ^ mask) >> 2) / low);
  }
  by_residue_.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    by_residue_[static_cast<std::size_t>(r)] = residue_weights(n, gamma, r);
    z_ += static_cast<double>(counts_[static_cast<std::size_t>(r)]) * by_residue_[static_cast<std::size_t>(r)].total();
  }
}

double ExactMeasure::restricted_weight(int r, Restriction restriction) const {
  const auto& w = by_residue_[static_cast<std::size_t>(r)];
  const double one_minus_q = -std::expm1(-lambda_ * n_);
  const double beyond_one = std::exp(-lambda_ * (1 + n_)) / one_minus_q;
  switch (restriction) {
    case Restriction::all:
      return w.total();
    case Restriction::y_plus_one:
      return r == 1 % n_ ? std::exp(-lambda_) : 0.0;
    case Restriction::y_minus_one:
      return r == n_ - 1 ? std::exp(-lambda_) : 0.0;
    case Restriction::y_above_one:
      return r == 1 % n_ ? beyond_one : w.plus;
    case Restriction::y_below_minus_one:
      return r == n_ - 1 ? beyond_one : w.minus;
  }
  return 0.0;
}

double ExactMeasure::weight_of_integral(std::int64_t y) const {
  return std::exp(-lambda_ * static_cast<double>(y < 0 ? -y : y));
}

std::vector<std::pair<std::int64_t, double>> ExactMeasure::y_law(std::int64_t max_abs) const {
  std::vector<std::pair<std::int64_t, double>> law;
  for (std::int64_t y = -max_abs; y <= max_abs; ++y) {
    const auto r = static_cast<std::size_t>(((y % n_) + n_) % n_);
    if (counts_[r] == 0) continue;
    law.emplace_back(y, static_cast<double>(counts_[r]) * weight_of_integral(y) / z_);
  }
  return law;
}

std::string exact_measure_json(const ExactMeasure& measure, std::int64_t max_abs) {
  nlohmann::json j;
  j["N"] = measure.size();
  j["gamma"] = measure.gamma();
  j["Z"] = measure.z();
  auto law = nlohmann::json::array();
  for (const auto& [y, prob] : measure.y_law(max_abs)) law.push_back({y, prob});
  j["y_law"] = law;
  return j.dump();
}

}  // namespace ifl
