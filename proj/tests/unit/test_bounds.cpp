#include <cstdint>

#include "doctest.h"
#include "ssd/bounds.hpp"
#include "ssd/error.hpp"
#include "support/oracles.hpp"

using namespace ssd;

namespace {

BigInt floor_e_factorial(int k) {
  const BigInt f = oracle::floor_e_factorial<BigInt, BigRational>(k);
  REQUIRE(f >= 0);
  return f;
}

}  // namespace

TEST_CASE("recurrence values") {
  const int expected[] = {1, 2, 5, 16, 65, 326};
  for (int k = 0; k <= 5; ++k) CHECK(c_upper(k) == expected[k]);
  CHECK(floor_e_factorial(2) == 5);
  CHECK(floor_e_factorial(4) == 65);
}

TEST_CASE("recurrence matches floor(e k!)") {
  // k = 0 is the exception: C(0) = 1 while floor(e) = 2.
  CHECK(floor_e_factorial(0) == 2);
  for (int k = 1; k <= 64; ++k) {
    CAPTURE(k);
    CHECK(c_upper(k) == floor_e_factorial(k));
    CHECK(BigRational(c_upper(k)) == truncated_e_times_factorial(k));
    CHECK(c_upper(k) <= 3 * factorial(k));
  }
}

TEST_CASE("lower bounds sit below the recurrence") {
  for (int k = 2; k <= 64; ++k) CHECK(enhanced_lower_bound(k) <= c_upper(k));
  const LowerBounds two = lower_bounds(2);
  CHECK(two.doubling == 4);
  CHECK(two.enhanced == BigInt(5));
  const LowerBounds zero = lower_bounds(0);
  CHECK(zero.doubling == 1);
  CHECK_FALSE(zero.enhanced.has_value());
  for (int k = 0; k < 62; ++k) CHECK(lower_bounds(k).doubling == BigInt(std::uint64_t{1} << k));
  CHECK(lower_bounds(5).enhanced == BigInt((std::uint64_t{1} << 5) + (std::uint64_t{1} << 3)));
  CHECK_THROWS_AS(enhanced_lower_bound(1), Error);
}

TEST_CASE("bounds for n") {
  const BoundTable t6 = bounds_for_n(6);
  CHECK(t6.pair_bound == 6);
  CHECK(t6.total_bound == 720);
  const BoundTable t4 = bounds_for_n(4);
  CHECK(t4.pair_bound == 3);
  CHECK(t4.total_bound == 24);
  const BoundTable t10 = bounds_for_n(10);
  std::uint64_t f = 1;
  for (int i = 1; i <= 10; ++i) f *= i;
  CHECK(t10.total_bound == BigInt(f));
  CHECK(t10.pair_bound == BigInt(3 * 720));
  CHECK(t10.pair_bound == 2160);
  for (int n = 4; n <= 64; ++n) {
    const BoundTable t = bounds_for_n(n);
    CHECK(t.pair_dominates_recurrence);
    // Independent pairs times the pair bound stays below n!.
    const BigInt pairs = 3 * (factorial(n) / (factorial(4) * factorial(n - 4)));
    CHECK(pairs * t.pair_bound <= t.total_bound);
  }
  CHECK_THROWS_AS(bounds_for_n(3), Error);
}
