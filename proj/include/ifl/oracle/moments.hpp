#pragma once

#include <cstdint>
#include <vector>

#include "ifl/core/test_function.hpp"
#include "ifl/measures/exact_measure.hpp"

namespace ifl {

struct MomentQuery {
  int n = 0;
  double gamma = 1.0;
  std::vector<Site> sites;
  Restriction restriction = Restriction::all;
};

struct MomentResult {
  /// E[1_restriction prod_i xibar(x_i)] from the enumeration.
  double value = 0.0;
  /// The same from cardinality tables with the distinguished sites fixed.
  double value_cardinality = 0.0;
  /// Signed class sums sum_xi prod_i (2 xi(x_i) - 1) per residue of the anchor-0 integral.
  std::vector<std::int64_t> signed_counts;
  bool counts_match = false;
};

/// Both routes, asserted to agree (throws std::logic_error otherwise).
MomentResult moment(const ExactMeasure& measure, const MomentQuery& query);
MomentResult moment(const MomentQuery& query);
/// Same as `moment`; named for queries with a restriction.
MomentResult restricted_moment(const ExactMeasure& measure, const MomentQuery& query);

/// c(d) = E[xibar(0) xibar(d)] for d = 0..N-1 (c(0) = 1/4).
std::vector<double> two_point_function(const ExactMeasure& measure);

/// Var(U(phi)) = (1/N) [sum_x phi^2/4 + sum_{x != y} c(y-x) phi(x/N) phi(y/N)].
double fluct_variance_exact(const ExactMeasure& measure, const TestFunction& phi);
double fluct_variance_exact(int n, double gamma, const TestFunction& phi);

}  // namespace ifl
