#pragma once

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssd {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(0) = 1, C(k) = k * C(k - 1) + 1. Throws MalformedEncoding for k < 0.
BigInt c_upper(int k);

BigInt factorial(int n);

// k! * sum_{s <= k} 1 / s!, exactly.
BigRational truncated_e_times_factorial(int k);

struct BoundTable {
  int n = 0;
  BigInt pair_bound;   // 3 (n - 4)!
  BigInt total_bound;  // n!
  BigInt c_upper_n4;   // C(n - 4)
  bool pair_dominates_recurrence = false;  // C(n - 4) <= 3 (n - 4)!
};

// Throws MalformedEncoding for n < 4.
BoundTable bounds_for_n(int n);

struct LowerBounds {
  BigInt doubling;                 // 2^k
  std::optional<BigInt> enhanced;  // 2^k + 2^(k - 2), k >= 2
};

LowerBounds lower_bounds(int k);
// Throws EnhancedUndefined for k < 2.
BigInt enhanced_lower_bound(int k);

}  // namespace ssd
