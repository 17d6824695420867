#pragma once

// The inductive step behind the crossing bound, checked on concrete drawings:
// for every lens j the minimal curve e_j from its marker to an end u of e is
// laid over the drawing, e is erased, and the pair (e_j, e') is rebuilt as a
// two-edge drawing of its own.

#include <map>
#include <string>
#include <vector>

#include "ssd/two_edge.hpp"

namespace ssd {

struct RoutePair {
  CurveRoute route;
  RouteOverlay overlay;
  RegionQuotient regions;       // overlay faces with e erased
  TwoEdgeDrawing fresh;         // D(e_j, e'), outer = common endpoint face if any
  std::map<FaceId, FaceId> region_to_fresh;  // bijection onto fresh faces
};

// Throws PropertyViolation when the overlay and the rebuilt drawing disagree.
RoutePair extract_route_pair(const TwoEdgeDrawing& d, const CurveRoute& route);

// Face of the fresh drawing holding a point that sat in base face f.
FaceId carry_point(const TwoEdgeDrawing& d, const RoutePair& pair, FaceId f);

struct RouteCheck {
  int lens = 0;
  Vertex target = kEStart;
  int crossings = 0;  // X_j
  std::vector<int> gaps;
  std::string fresh_encoding;
  bool no_deadlock = false;  // P1
  bool no_spiral = false;    // P1
  bool lenses_hit = false;   // P2, by markers other than p_j
  bool within_recurrence = false;  // X_j <= C(k - 1)
};

struct PropertyReport {
  int crossings = 0;
  int hitting_number = 0;
  std::vector<RouteCheck> routes;
  // Per end of e (u0, u1): every gap crossed by some e_j (P3), and
  // N <= 1 + sum_j X_j.
  bool gaps_covered[2] = {true, true};
  long long route_crossing_sum[2] = {0, 0};
  bool counting_holds[2] = {true, true};
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Requires a deadlock-free, spiral-free drawing whose lenses all hold a
// marker; throws DeadlockDrawing, NotAdmissible otherwise. Violations are
// collected in the report.
PropertyReport check_properties(const TwoEdgeDrawing& d, SpiralOptions spiral = {});

// Same, throwing PropertyViolation naming the first failed property.
PropertyReport properties_p123(const TwoEdgeDrawing& d, SpiralOptions spiral = {});

}  // namespace ssd
