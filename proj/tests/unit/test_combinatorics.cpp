#include <doctest.h>

#include <cmath>
#include <set>

#include "ifl/combinatorics/binomial_identity.hpp"
#include "ifl/combinatorics/partition.hpp"
#include "ifl/combinatorics/subset_dp.hpp"
#include "ifl/combinatorics/tables.hpp"
#include "oracles.hpp"

using namespace ifl;

TEST_CASE("subset DP equals enumeration") {
  for (int n : {6, 8, 10, 12}) {
    for (int size = 0; size <= n; size += 2) {
      for (int mod : {2, 3, 5, 7}) {
        CHECK(subset_count_dp(n, size, mod) == subset_count_brute(n, size, mod));
        CHECK(subset_count_dp(n, size, mod, {1}, {2}) == subset_count_brute(n, size, mod, {1}, {2}));
        CHECK(subset_count_dp(n, size, mod, {2, 5}, {n}) == subset_count_brute(n, size, mod, {2, 5}, {n}));
      }
    }
  }
}

TEST_CASE("three-element subsets of 1..6 by sum mod 3") {
  const auto a = subset_count_dp(6, 3, 3);
  CHECK(a[0] - 2 == a[1]);
  CHECK(a[1] == a[2]);
  CHECK(a[0] + a[1] + a[2] == 20);
}

TEST_CASE("hole residue mapping agrees with direct classification") {
  for (int p : {2, 3, 4, 5, 6, 7}) {
    const int n = 2 * p;
    const auto direct = oracle::slope_sum_classes(n);
    const auto holes = subset_count_dp(n, p, p);
    for (int k = 0; k < n; ++k) {
      const int r = hole_residue_for_class(p, k);
      if (r < 0) {
        CHECK(direct[static_cast<std::size_t>(k)] == 0);
      } else {
        CHECK(BigInt(direct[static_cast<std::size_t>(k)]) == holes[static_cast<std::size_t>(r)]);
      }
    }
  }
  CHECK(hole_residue_for_class(5, 2) == -1);
  CHECK(hole_residue_for_class(5, 1) == 2);
  CHECK(hole_residue_for_class(5, 5) == 0);
  CHECK(hole_residue_for_class(5, 9) == 3);
}

TEST_CASE("integral class counts against explicit height sums") {
  for (int n : {4, 6, 8, 10, 12, 14}) {
    std::vector<long long> by_integral(static_cast<std::size_t>(n), 0);
    for (const auto& xi : oracle::balanced_sequences(n)) {
      const long long y = oracle::integral(0, xi);
      ++by_integral[static_cast<std::size_t>(((y % n) + n) % n)];
    }
    const auto counts = integral_class_counts(n);
    for (int r = 0; r < n; ++r) {
      CHECK(counts[static_cast<std::size_t>(r)] == by_integral[static_cast<std::size_t>(r)]);
      CHECK(slope_class_for_integral_residue(n, r) == (n - r) % n);
    }
  }
}

TEST_CASE("integral class counts with fixed positions") {
  const int n = 10;
  const auto direct = oracle::slope_sum_classes(n, {3}, {10, 4});
  const auto counts = integral_class_counts(n, {10, 4}, {3});
  for (int r = 0; r < n; ++r) {
    CHECK(counts[static_cast<std::size_t>(r)] == direct[static_cast<std::size_t>(slope_class_for_integral_residue(n, r))]);
  }
}

TEST_CASE("alpha deviation bound for primes up to 19") {
  for (int p : {3, 5, 7, 11, 13, 17, 19}) {
    const auto t = alpha_table(p);
    CHECK(t.prime_gated());
    CHECK(t.max_deviation(0) <= 2.0);
    BigInt sum = 0;
    for (const auto& c : t.counts[0]) sum += c;
    CHECK(sum == binomial(2 * p, p));
  }
  const auto t5 = alpha_table(5);
  for (int k : t5.odd_classes()) {
    CHECK(std::abs(to_double(t5.counts[0][static_cast<std::size_t>(k)]) - 252.0 / 5) <= 2.0);
  }
}

TEST_CASE("alpha table counts by direct slope classification") {
  for (int p : {3, 5, 7}) {
    const auto t = alpha_table(p);
    const auto direct = oracle::slope_sum_classes(2 * p);
    for (int k = 0; k < 2 * p; ++k) CHECK(t.counts[0][static_cast<std::size_t>(k)] == direct[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("beta and gamma tables against direct classification and bounds") {
  for (int p : {3, 5, 7}) {
    for (const auto& sites : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 5}}) {
      const auto t = beta_table(p, sites[0], sites[1]);
      REQUIRE(t.rows() == 3);
      for (int j = 0; j < 3; ++j) {
        std::vector<int> plus(sites.begin(), sites.begin() + j), minus(sites.begin() + j, sites.end());
        const auto direct = oracle::slope_sum_classes(2 * p, plus, minus);
        for (int k = 0; k < 2 * p; ++k) CHECK(t.counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] == direct[static_cast<std::size_t>(k)]);
        CHECK(t.max_deviation(j) <= p);
      }
    }
    const auto g = gamma4_table(p, 1, 2, 3, 4);
    REQUIRE(g.rows() == 5);
    for (int j = 0; j < 5; ++j) {
      std::vector<int> plus, minus;
      for (int i = 0; i < 4; ++i) (i < j ? plus : minus).push_back(i + 1);
      const auto direct = oracle::slope_sum_classes(2 * p, plus, minus);
      for (int k = 0; k < 2 * p; ++k) CHECK(g.counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] == direct[static_cast<std::size_t>(k)]);
      CHECK(g.max_deviation(j) <= p * p * p);
    }
  }
}

TEST_CASE("worked examples for the constrained bounds at p=5") {
  const auto b = beta_table(5, 1, 2);
  for (int j = 0; j < 3; ++j) CHECK(b.max_deviation(j) <= 5.0);
  CHECK(b.row_total(1) == binomial(8, 4));
  const auto g = gamma4_table(5, 1, 2, 3, 4);
  for (int j = 0; j < 5; ++j) CHECK(g.max_deviation(j) <= 125.0);
  CHECK(g.row_total(0) == binomial(6, 5));
}

TEST_CASE("library brute-force tables match DP tables") {
  for (int p : {3, 5, 7}) {
    for (const auto& sites : std::vector<std::vector<int>>{{}, {1, 2}, {2, 7}, {1, 3, 5, 6}}) {
      if (!sites.empty() && sites.back() > 2 * p) continue;
      const auto a = constrained_table(p, sites);
      const auto b = brute_force_table(p, sites);
      CHECK(a.counts == b.counts);
    }
  }
}

TEST_CASE("non-prime p is accepted but not gated") {
  const auto t = alpha_table(9);
  CHECK_FALSE(t.prime_gated());
  BigInt sum = 0;
  for (const auto& c : t.counts[0]) sum += c;
  CHECK(sum == binomial(18, 9));
}

TEST_CASE("partition function equals the truncated sum over height functions") {
  for (double gamma : {0.9, 1.0, 1.5}) {
    const auto pf = partition_function(6, gamma);
    const double brute = oracle::partition_truncated(6, gamma, 400.0 * std::pow(6.0, gamma) / 6.0 + 400.0);
    CHECK(pf.z == doctest::Approx(brute).epsilon(1e-12));
    CHECK(std::log(pf.z) == doctest::Approx(pf.log_z).epsilon(1e-12));
  }
  const auto pf = partition_function(10, 1.0);
  CHECK(pf.z == doctest::Approx(oracle::partition_truncated(10, 1.0, 800)).epsilon(1e-12));
}

TEST_CASE("residue weights are the anchor sums of the weight") {
  const int n = 8;
  const double gamma = 1.2;
  for (int r = 0; r < n; ++r) {
    double plus = 0, minus = 0, zero = 0;
    for (int a = -400; a <= 400; ++a) {
      const long long y = r + static_cast<long long>(a) * n;
      const double w = oracle::weight(n, gamma, y);
      (y > 0 ? plus : y < 0 ? minus : zero) += w;
    }
    const auto w = residue_weights(n, gamma, r);
    CHECK(w.plus == doctest::Approx(plus).epsilon(1e-13));
    CHECK(w.minus == doctest::Approx(minus).epsilon(1e-13));
    CHECK(w.zero == zero);
  }
}

TEST_CASE("normalized partition function tends to two, its positive half to one") {
  const auto pf = partition_function(202, 1.0);
  CHECK(pf.normalized == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(pf.normalized_positive == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(pf.inverse_bound_holds);
  CHECK(partition_function(26, 1.0).inverse_bound_holds);
}

TEST_CASE("binomial identity") {
  const auto small = binom_identity(2, 1);
  CHECK(small.lhs == BigRational(-1, 3));
  CHECK(small.rhs == BigRational(-1, 3));
  for (int n = 1; n <= 30; ++n) {
    CHECK(binom_identity(n, n).lhs == BigRational(n % 2 ? -1 : 1));
    for (int m = 1; m <= n; ++m) {
      const auto id = binom_identity(n, m);
      CHECK(id.lhs == id.rhs);
    }
  }
  CHECK_THROWS(binom_identity(3, 4));
}

TEST_CASE("suffix table unranks every sequence of a class exactly once") {
  const int n = 10;
  const SuffixCountTable table(n);
  std::set<std::vector<std::uint8_t>> seen;
  const auto counts = integral_class_counts(n);
  for (int r = 0; r < n; ++r) {
    CHECK(BigInt(table.class_size(r)) == counts[static_cast<std::size_t>(r)]);
    const auto size = static_cast<long long>(table.class_size(r));
    for (long long k = 0; k < size; ++k) {
      const auto xi = table.unrank(r, SuffixCountTable::Count(k));
      const long long y = oracle::integral(0, xi);
      CHECK(((y % n) + n) % n == r);
      seen.insert(xi);
    }
  }
  CHECK(seen.size() == 252);
}
