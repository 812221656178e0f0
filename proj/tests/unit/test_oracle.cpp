#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ifl/oracle/dirichlet.hpp"
#include "ifl/oracle/moments.hpp"
#include "oracles.hpp"

using namespace ifl;

namespace {

oracle::Level level_of(Restriction r) {
  switch (r) {
    case Restriction::all:
      return oracle::Level::all;
    case Restriction::y_plus_one:
      return oracle::Level::plus_one;
    case Restriction::y_minus_one:
      return oracle::Level::minus_one;
    case Restriction::y_above_one:
      return oracle::Level::above_one;
    case Restriction::y_below_minus_one:
      return oracle::Level::below_minus_one;
  }
  return oracle::Level::all;
}

}  // namespace

TEST_CASE("moments agree with explicit sums over height functions") {
  for (int n : {6, 10}) {
    const ExactMeasure m(n, 1.0);
    for (const auto& sites : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 4}, {0, 1, 2, 3}, {0, 2, 3, 5}}) {
      for (auto r : {Restriction::all, Restriction::y_plus_one, Restriction::y_minus_one, Restriction::y_above_one,
                     Restriction::y_below_minus_one}) {
        const auto res = moment(m, {n, 1.0, sites, r});
        CHECK(res.counts_match);
        CHECK(res.value == doctest::Approx(res.value_cardinality).epsilon(1e-12));
        const double brute = oracle::moment(n, 1.0, sites, level_of(r));
        CHECK(res.value == doctest::Approx(brute).epsilon(1e-10).scale(1e-14));
      }
    }
  }
}

TEST_CASE("restricted moments partition the unrestricted one") {
  const ExactMeasure m(14, 1.0);
  const std::vector<int> sites{0, 1, 2, 3};
  double parts = 0;
  for (auto r : {Restriction::y_plus_one, Restriction::y_minus_one, Restriction::y_above_one,
                 Restriction::y_below_minus_one}) {
    parts += restricted_moment(m, {14, 1.0, sites, r}).value;
  }
  CHECK(parts == doctest::Approx(moment(m, {14, 1.0, sites}).value).epsilon(1e-12));
}

TEST_CASE("odd-order moments vanish by particle-hole symmetry") {
  const ExactMeasure m(10, 1.0);
  CHECK(std::abs(moment(m, {10, 1.0, {0}}).value) < 1e-15);
  CHECK(std::abs(moment(m, {10, 1.0, {0, 1, 3}}).value) < 1e-15);
}

TEST_CASE("two point function") {
  const ExactMeasure m(12, 1.0);
  const auto c = two_point_function(m);
  CHECK(c[0] == 0.25);
  double sum = 0;
  for (double v : c) sum += v;
  CHECK(std::abs(sum) < 1e-14);
  for (int d = 1; d < 12; ++d) {
    CHECK(c[static_cast<std::size_t>(d)] == doctest::Approx(c[static_cast<std::size_t>(12 - d)]).epsilon(1e-12));
    CHECK(c[static_cast<std::size_t>(d)] == doctest::Approx(oracle::moment(12, 1.0, {0, d})).epsilon(1e-10));
  }
}

TEST_CASE("exact fluctuation variance") {
  const auto phi = TestFunction::from_id("cos1");
  const double v = fluct_variance_exact(10, 1.0, phi);
  const double brute = oracle::fluct_variance(10, 1.0, [](double u) { return std::sqrt(2.0) * std::cos(2 * std::numbers::pi * u); });
  CHECK(v == doctest::Approx(brute).epsilon(1e-10));
  CHECK(fluct_variance_exact(10, 1.0, TestFunction::from_id("one")) == 0.0);
  CHECK(std::abs(fluct_variance_exact(10, 1.0, phi) - 0.25) <= 3.0 / 10);
}

TEST_CASE("Dirichlet form equals the carre du champ and the explicit generator sums") {
  const int n = 6;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = oracle::random_slope_function(seed);
    const auto lib = dirichlet_identity(n, 1.0, [&](const HeightConfig& h) {
      return f(oracle::Slopes(h.site_slopes().begin(), h.site_slopes().end()));
    });
    const auto ref = oracle::dirichlet(n, 1.0, f);
    CHECK(std::abs(lib.dirichlet - lib.carre) <= 1e-10 * std::max(std::abs(lib.dirichlet), 1e-30));
    CHECK(lib.dirichlet == doctest::Approx(ref.dirichlet).epsilon(1e-10));
    CHECK(lib.carre == doctest::Approx(ref.carre).epsilon(1e-10));
  }
  CHECK_THROWS_AS(dirichlet_identity(n, 1.0, [](const HeightConfig& h) { return static_cast<double>(h.anchor()); }),
                  ValidationError);
}
