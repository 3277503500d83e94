#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace locount {

// Counts can exceed machine width as soon as binomials over host degrees are
// involved; everything downstream of the dictionaries uses BigCount.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(long long n) {
  BigCount r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigCount binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace locount
