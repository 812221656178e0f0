#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ifl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

bool is_prime(long long n);

}  // namespace ifl
