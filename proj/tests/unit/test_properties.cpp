#include <vector>

#include "doctest.h"
#include "ssd/constructions.hpp"
#include "ssd/error.hpp"
#include "ssd/properties.hpp"

using namespace ssd;

TEST_CASE("properties hold on the doubling family") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const PropertyReport r = properties_p123(doubling(k));
    CHECK(r.ok());
    CHECK(r.routes.size() == static_cast<std::size_t>(2 * k));
    for (int side = 0; side < 2; ++side) {
      CHECK(r.gaps_covered[side]);
      CHECK(r.crossings <= 1 + r.route_crossing_sum[side]);
    }
  }
}

TEST_CASE("properties hold on enhanced doubling") {
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(properties_p123(enhanced_doubling(k)).ok());
  }
}

TEST_CASE("route counts on small doublings") {
  const PropertyReport one = properties_p123(doubling(1));
  CHECK(one.route_crossing_sum[0] == 1);
  CHECK(one.crossings <= 1 + one.route_crossing_sum[0]);
  for (const RouteCheck& rc : one.routes) CHECK(rc.fresh_encoding.rfind("1:", 0) == 0);

  const PropertyReport two = properties_p123(doubling(2));
  for (const RouteCheck& rc : two.routes) CHECK(rc.crossings == static_cast<int>(rc.gaps.size()));
}

TEST_CASE("single crossing is vacuous") {
  const PropertyReport r = properties_p123(validate(Encoding{{1}, {1}}));
  CHECK(r.routes.empty());
  CHECK(r.ok());
}

TEST_CASE("preconditions") {
  try {
    check_properties(spiral_example());
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kNotAdmissible);
  }
  CHECK_THROWS_AS(check_properties(twist(3)), Error);
  CHECK_THROWS_AS(check_properties(validate(Encoding{{1, 2}, {-1, -1}})), Error);
}

TEST_CASE("rebuilt pair matches the overlay") {
  const TwoEdgeDrawing d = doubling(3);
  for (int lens : lenses(d)) {
    const CurveRoute route = minimal_curve(d, lens, kEEnd);
    const RoutePair pair = extract_route_pair(d, route);
    CHECK(pair.fresh.crossings() == static_cast<int>(route.crossed.size()));
    CHECK(pair.regions.region_count == pair.fresh.map.face_count());
    CHECK(is_deadlock(pair.fresh) == route_deadlocks(d, route));
  }
}

TEST_CASE("rebuilt pair of a spiral route deadlocks") {
  const TwoEdgeDrawing d = spiral_example();
  int deadlocked = 0;
  for (int lens : lenses(d)) {
    for (Vertex target : {kEStart, kEEnd}) {
      const CurveRoute route = minimal_curve(d, lens, target);
      const RoutePair pair = extract_route_pair(d, route);
      const bool dl = route_deadlocks(d, route);
      CHECK(is_deadlock(pair.fresh) == dl);
      deadlocked += dl;
    }
  }
  CHECK(deadlocked > 0);
}

TEST_CASE("doubling(2) route crossings equal lens depths") {
  const TwoEdgeDrawing d = doubling(2);
  const LaminarForest forest = laminar_forest(d);
  const PropertyReport r = properties_p123(d);
  long long depth_sum = 0;
  for (int lens : lenses(d)) depth_sum += forest.depth[lens];
  CHECK(r.route_crossing_sum[0] == depth_sum);
  CHECK(r.route_crossing_sum[1] == depth_sum);
  // Lens 2 hangs at the root, lens 3 inside bag 1.
  CHECK(forest.chain(2) == std::vector<int>{2});
  CHECK(forest.chain(3) == std::vector<int>{3, 1});
  CHECK(4 <= 1 + depth_sum);
}
