#include "ifl/measures/samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "ifl/combinatorics/partition.hpp"

namespace ifl {

namespace {

using Count = SuffixCountTable::Count;

Count uniform_below(const Count& bound, RngStream& rng) {
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    Count v = 0;
    for (unsigned drawn = 0; drawn < bits; drawn += 64) {
      v <<= 64;
      v |= Count(rng.engine()());
    }
    const unsigned excess = ((bits + 63) / 64) * 64 - bits;
    v >>= excess;
    if (v < bound) return v;
  }
}

}  // namespace

InvariantSampler::InvariantSampler(int n, double gamma) : n_(n), gamma_(gamma) {
  if (!(gamma > 0)) throw ValidationError("sample_invariant: gamma must be positive");
  if (n <= 0 || n % 2) throw ValidationError("sample_invariant: N must be even and positive");
  table_ = std::make_shared<SuffixCountTable>(n);
  const double lambda = std::pow(static_cast<double>(n), -gamma);
  escape_ = -std::expm1(-lambda * n);
  for (int r = 0; r < n; ++r) {
    const double count = table_->class_size(r).convert_to<double>();
    if (count == 0.0) continue;
    const auto w = residue_weights(n, gamma, r);
    branches_.push_back({r, 1});
    branch_weights_.push_back(count * w.plus);
    branches_.push_back({r, -1});
    branch_weights_.push_back(count * w.minus);
    if (w.zero > 0) {
      branches_.push_back({r, 0});
      branch_weights_.push_back(count * w.zero);
    }
  }
}

HeightConfig InvariantSampler::sample(RngStream& rng) const {
  std::discrete_distribution<std::size_t> pick(branch_weights_.begin(), branch_weights_.end());
  const auto branch = branches_[pick(rng.engine())];
  const std::int64_t n = n_;
  std::int64_t y = 0;
  if (branch.side != 0) {
    // offset a >= 0 with P(a) = q^a (1 - q)
    std::geometric_distribution<std::int64_t> offset(escape_);
    const std::int64_t a = offset(rng.engine());
    const std::int64_t first = branch.residue == 0 ? n : (branch.side > 0 ? branch.residue : n - branch.residue);
    y = branch.side * (first + a * n);
  }
  const Count rank = uniform_below(table_->class_size(branch.residue), rng);
  auto xi = table_->unrank(branch.residue, rank);
  const std::int64_t base = base_integral(xi);
  return HeightConfig::from_site_slopes((y - base) / n, std::move(xi));
}

HeightConfig sample_invariant(int n, double gamma, RngStream& rng) { return InvariantSampler(n, gamma).sample(rng); }

double profile_mass(const std::function<double(double)>& rho0, int points) {
  double acc = 0.0;
  for (int i = 0; i < points; ++i) acc += rho0((i + 0.5) / points);
  return acc / points;
}

HeightConfig sample_profile(const ProfileMeasureSpec& spec, RngStream& rng, ProfileSampleStats* stats,
                            int rejection_cap) {
  const int n = spec.n;
  if (n <= 0 || n % 2) throw ValidationError("sample_profile: N must be even and positive");
  const double mass = profile_mass(spec.rho0);
  if (std::abs(mass - 0.5) > 1e-9) {
    throw ValidationError("sample_profile: integral of rho0 is " + std::to_string(mass) + ", must be 1/2");
  }
  std::vector<double> rho(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const double v = spec.rho0(static_cast<double>(x) / n);
    if (v < 0.0 || v > 1.0) throw ValidationError("sample_profile: rho0 outside [0,1]");
    rho[static_cast<std::size_t>(x)] = v;
  }
  std::vector<std::uint8_t> xi(static_cast<std::size_t>(n));
  bool accepted = false;
  int tries = 0;
  for (; tries < rejection_cap && !accepted; ++tries) {
    int ones = 0;
    for (int x = 0; x < n; ++x) {
      xi[static_cast<std::size_t>(x)] = rng.bernoulli(rho[static_cast<std::size_t>(x)]) ? 1 : 0;
      ones += xi[static_cast<std::size_t>(x)];
    }
    accepted = ones == n / 2;
  }
  if (stats) {
    stats->rejections = accepted ? tries - 1 : tries;
    stats->used_fallback = !accepted;
  }
  if (!accepted) {
    // sequential conditional sampling: tail[x][c] = P(sites x..N-1 hold exactly c ones)
    const int half = n / 2;
    std::vector<std::vector<double>> tail(static_cast<std::size_t>(n + 1),
                                          std::vector<double>(static_cast<std::size_t>(half + 1), 0.0));
    tail[static_cast<std::size_t>(n)][0] = 1.0;
    for (int x = n - 1; x >= 0; --x) {
      const double r = rho[static_cast<std::size_t>(x)];
      for (int c = 0; c <= half; ++c) {
        double v = (1.0 - r) * tail[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(c)];
        if (c > 0) v += r * tail[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(c - 1)];
        tail[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] = v;
      }
    }
    if (!(tail[0][static_cast<std::size_t>(half)] > 0.0)) {
      throw ValidationError("sample_profile: balance has zero probability under rho0");
    }
    int remaining = half;
    for (int x = 0; x < n; ++x) {
      const double denom = tail[static_cast<std::size_t>(x)][static_cast<std::size_t>(remaining)];
      const double take = remaining > 0 ? rho[static_cast<std::size_t>(x)] *
                                              tail[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(remaining - 1)] / denom
                                        : 0.0;
      const bool one = rng.bernoulli(take);
      xi[static_cast<std::size_t>(x)] = one ? 1 : 0;
      remaining -= one ? 1 : 0;
    }
    if (remaining != 0) throw ValidationError("sample_profile: conditional sampling failed to balance");
  }
  const double centre = n * spec.h0_at_zero;
  const auto lo = static_cast<std::int64_t>(std::floor(centre)) - 60;
  std::vector<double> w(121);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(-std::abs(static_cast<double>(lo + static_cast<std::int64_t>(i)) - centre));
  std::discrete_distribution<std::size_t> anchor(w.begin(), w.end());
  return HeightConfig::from_site_slopes(lo + static_cast<std::int64_t>(anchor(rng.engine())), std::move(xi));
}

}  // namespace ifl
