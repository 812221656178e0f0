#include "ifl/combinatorics/bigint.hpp"
#include "ifl/combinatorics/binomial_identity.hpp"

#include <stdexcept>

namespace ifl {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BinomIdentity binom_identity(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("binom_identity: need 1 <= m <= N");
  BigInt acc = 0;
  for (int j = 0; j <= 2 * m; ++j) {
    BigInt term = binomial(2 * m, j) * binomial(2 * n - 2 * m, n - j);
    if (j % 2) acc -= term; else acc += term;
  }
  BinomIdentity out;
  out.lhs = BigRational(acc, binomial(2 * n, n));
  const BigInt num = binomial(n, m);
  out.rhs = BigRational(m % 2 ? BigInt(-num) : num, binomial(2 * n, 2 * m));
  return out;
}

}  // namespace ifl
