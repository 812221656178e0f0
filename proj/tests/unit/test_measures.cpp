#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <numbers>

#include "ifl/core/pairings.hpp"
#include "ifl/measures/balance.hpp"
#include "ifl/measures/exact_measure.hpp"
#include "ifl/measures/samplers.hpp"
#include "oracles.hpp"

using namespace ifl;

namespace {

// Pearson statistic against expected probabilities, with cells below 5 expected counts merged.
double pearson_statistic(const std::vector<double>& obs, const std::vector<double>& probs, int& dof) {
  const double total = std::accumulate(obs.begin(), obs.end(), 0.0);
  double stat = 0, pooled_o = 0, pooled_e = 0;
  dof = -1;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double e = probs[i] * total;
    if (e < 5) {
      pooled_o += obs[i];
      pooled_e += e;
      continue;
    }
    stat += (obs[i] - e) * (obs[i] - e) / e;
    ++dof;
  }
  if (pooled_e > 0) {
    stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++dof;
  }
  return stat;
}

}  // namespace

TEST_CASE("exact measure class counts and normalization") {
  for (int n : {6, 8, 10}) {
    const ExactMeasure m(n, 1.0);
    CHECK(m.num_sequences() == static_cast<std::size_t>(oracle::binom(n, n / 2)));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    double total = 0;
    for (std::size_t i = 0; i < m.num_sequences(); ++i) {
      ++counts[static_cast<std::size_t>(m.residue(i))];
      total += m.probability(i);
    }
    CHECK(counts == m.class_counts());
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("exact Y law against the explicit sum over height functions") {
  for (double gamma : {0.9, 1.0, 1.5}) {
    const int n = 8;
    const ExactMeasure m(n, gamma);
    const auto states = oracle::states(n, gamma, oracle::default_cutoff(n, gamma));
    double z = 0;
    std::map<long long, double> law;
    for (const auto& s : states) {
      z += s.weight;
      law[s.y] += s.weight;
    }
    CHECK(m.z() == doctest::Approx(z).epsilon(1e-12));
    for (const auto& [y, p] : m.y_law(30)) {
      CHECK(p == doctest::Approx(law[y] / z).epsilon(1e-12));
    }
  }
}

TEST_CASE("restricted weights split the class weight") {
  const ExactMeasure m(10, 1.0);
  for (int r = 0; r < 10; ++r) {
    const double all = m.restricted_weight(r, Restriction::all);
    const double parts = m.restricted_weight(r, Restriction::y_plus_one) + m.restricted_weight(r, Restriction::y_minus_one) +
                         m.restricted_weight(r, Restriction::y_above_one) +
                         m.restricted_weight(r, Restriction::y_below_minus_one);
    // the Y = 0 anchor term of class 0 belongs to no restriction
    const double zero_level = r == 0 ? 1.0 : 0.0;
    CHECK(all - zero_level == doctest::Approx(parts).epsilon(1e-13));
    CHECK(all == doctest::Approx(m.residue_weights_of(r).total()).epsilon(1e-13));
  }
  CHECK(restriction_from_string("Y>1") == Restriction::y_above_one);
  CHECK(to_string(Restriction::y_minus_one) == "Y=-1");
  CHECK_THROWS(restriction_from_string("Y=2"));
  CHECK_THROWS(ExactMeasure(28, 1.0));
}

TEST_CASE("pointwise balance holds for N in {6, 10}") {
  for (int n : {6, 10}) {
    for (double gamma : {0.9, 1.0, 1.5}) {
      const int window = anchor_window(n, gamma, 1e-12);
      double worst = 0;
      for (const auto& xi : oracle::balanced_sequences(n)) {
        for (int a = -window; a <= window; ++a) {
          const auto h = HeightConfig::from_site_slopes(a, xi);
          for (int x = 0; x < n; ++x) worst = std::max(worst, balance_check(n, gamma, h, x));
        }
      }
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("for N divisible by 4 balance fails only on transitions through Y = 0") {
  const int n = 8;
  for (const auto& xi : oracle::balanced_sequences(n)) {
    for (int a = -4; a <= 4; ++a) {
      const auto h = HeightConfig::from_site_slopes(a, xi);
      for (int x = 0; x < n; ++x) {
        const double r = balance_check(n, 1.0, h, x);
        if (h.slope(x) == h.slope(x + 1)) continue;
        const auto g = apply_flip(h, x);
        const bool touches_zero = h.integral() == 0 || g.integral() == 0;
        if (touches_zero) {
          CHECK(r > 1e-3);
        } else {
          CHECK(r <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("anchor window covers the requested mass") {
  const int n = 10;
  const double gamma = 1.0;
  const int window = anchor_window(n, gamma, 1e-12);
  double inside = 0, total = 0;
  for (const auto& s : oracle::states(n, gamma, 3000.0)) {
    total += s.weight;
    if (std::llabs(s.anchor) <= window) inside += s.weight;
  }
  CHECK(1 - inside / total <= 1e-12);
}

TEST_CASE("invariant sampler matches the exact sequence and Y laws") {
  const int n = 8;
  const ExactMeasure m(n, 1.0);
  const InvariantSampler sampler(n, 1.0);
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < m.num_sequences(); ++i) index[m.mask(i)] = i;
  std::vector<double> seq(m.num_sequences(), 0.0), probs(m.num_sequences());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = m.probability(i);
  const int limit = 200;
  std::vector<double> ys(2 * limit + 2, 0.0), yprobs(2 * limit + 2, 0.0);
  for (const auto& [y, p] : m.y_law(limit)) yprobs[static_cast<std::size_t>(y + limit)] = p;
  RngStream rng(12, 0);
  const int draws = 40000;
  for (int d = 0; d < draws; ++d) {
    const auto c = sampler.sample(rng);
    REQUIRE(c.caches_consistent());
    std::uint32_t mask = 0;
    for (int x = 0; x < n; ++x) mask |= static_cast<std::uint32_t>(c.slope(x)) << x;
    seq[index.at(mask)] += 1;
    const auto y = c.integral();
    ys[std::llabs(y) > limit ? ys.size() - 1 : static_cast<std::size_t>(y + limit)] += 1;
  }
  int dof = 0;
  const double s1 = pearson_statistic(seq, probs, dof);
  // 1e-4 upper quantile of chi-square is below dof + 6 sqrt(2 dof) + 20 for these sizes
  CHECK(s1 < dof + 6 * std::sqrt(2.0 * dof) + 20);
  const double s2 = pearson_statistic(ys, yprobs, dof);
  CHECK(s2 < dof + 6 * std::sqrt(2.0 * dof) + 20);
}

TEST_CASE("invariant sampler is reproducible") {
  const InvariantSampler sampler(30, 1.0);
  RngStream a(4, 4), b(4, 4);
  for (int i = 0; i < 20; ++i) CHECK(sampler.sample(a) == sampler.sample(b));
  RngStream c(4, 4), d(4, 4);
  CHECK(sample_invariant(30, 1.0, c) == sampler.sample(d));
}

TEST_CASE("profile sampler: balance, density and anchor") {
  const auto rho0 = [](double u) { return 0.5 + 0.3 * std::cos(2 * std::numbers::pi * u); };
  CHECK(std::abs(profile_mass(rho0) - 0.5) < 1e-12);
  const int n = 126;
  ProfileMeasureSpec spec{rho0, 0.5, n};
  RngStream rng(3, 3);
  const auto phi = TestFunction::cosine(1);
  double pairing = 0;
  double anchor = 0;
  const int draws = 400;
  for (int i = 0; i < draws; ++i) {
    ProfileSampleStats stats;
    const auto c = sample_profile(spec, rng, &stats);
    CHECK_FALSE(stats.used_fallback);
    pairing += pairing_density(c, phi);
    anchor += static_cast<double>(c.anchor());
  }
  // <rho0, cos> = 0.15 up to the 1/N sampling error
  CHECK(pairing / draws == doctest::Approx(0.15).epsilon(0.05));
  CHECK(anchor / draws == doctest::Approx(63.0).epsilon(0.02));
  CHECK_THROWS_AS(sample_profile({[](double) { return 0.6; }, 0.0, n}, rng), ValidationError);
}

TEST_CASE("profile sampler falls back to exact conditioning when rejection is capped") {
  const auto rho0 = [](double u) { return u < 0.5 ? 0.9 : 0.1; };
  RngStream rng(1, 1);
  ProfileSampleStats stats;
  const auto c = sample_profile({rho0, 0.0, 40}, rng, &stats, 0);
  CHECK(stats.used_fallback);
  CHECK(c.caches_consistent());
  int ones = 0;
  for (int x = 0; x < 40; ++x) ones += c.slope(x);
  CHECK(ones == 20);
}
