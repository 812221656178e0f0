#pragma once

#include "ifl/combinatorics/bigint.hpp"

namespace ifl {

struct BinomIdentity {
  BigRational lhs;
  BigRational rhs;
};

/// lhs = sum_{j=0}^{2m} C(2m,j) C(2N-2m,N-j) (-1)^j / C(2N,N),  rhs = (-1)^m C(N,m) / C(2N,2m).
BinomIdentity binom_identity(int n, int m);

}  // namespace ifl
