#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace howelab {

/// Arbitrary-precision integer used by all exact dimension identities.
using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); 0 for k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n-k+i, i) is integral at every step
  }
  return result;
}

}  // namespace howelab
