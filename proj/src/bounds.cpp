#include "ssd/bounds.hpp"

#include <string>

#include "ssd/error.hpp"

namespace ssd {

BigInt c_upper(int k) {
  if (k < 0) throw Error(ErrorCode::kMalformedEncoding, "k must be non-negative");
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = i * c + 1;
  return c;
}

BigInt factorial(int n) {
  if (n < 0) throw Error(ErrorCode::kMalformedEncoding, "factorial of a negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigRational truncated_e_times_factorial(int k) {
  BigRational sum = 0;
  BigInt s_fact = 1;
  for (int s = 0; s <= k; ++s) {
    if (s > 0) s_fact *= s;
    sum += BigRational(1, s_fact);
  }
  return sum * factorial(k);
}

BoundTable bounds_for_n(int n) {
  if (n < 4) throw Error(ErrorCode::kMalformedEncoding, "n must be at least 4, got " + std::to_string(n));
  BoundTable t;
  t.n = n;
  t.pair_bound = 3 * factorial(n - 4);
  t.total_bound = factorial(n);
  t.c_upper_n4 = c_upper(n - 4);
  t.pair_dominates_recurrence = t.c_upper_n4 <= t.pair_bound;
  return t;
}

BigInt enhanced_lower_bound(int k) {
  if (k < 2) throw Error(ErrorCode::kEnhancedUndefined, "enhanced doubling needs k >= 2");
  return (BigInt(1) << k) + (BigInt(1) << (k - 2));
}

LowerBounds lower_bounds(int k) {
  if (k < 0) throw Error(ErrorCode::kMalformedEncoding, "k must be non-negative");
  LowerBounds b;
  b.doubling = BigInt(1) << k;
  if (k >= 2) b.enhanced = enhanced_lower_bound(k);
  return b;
}

}  // namespace ssd
