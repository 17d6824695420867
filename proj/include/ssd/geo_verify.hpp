#pragma once

// Polyline drawings of (subgraphs of) complete graphs with exact rational
// coordinates, and their verification.
//
// .gdr files are JSON:
//   {"vertices": [["0/1", "0/1"], ...],
//    "edges": [{"u": 0, "v": 1, "polyline": [[x, y], ...]}, ...]}
// A polyline lists its bend points including both end vertices; without a
// polyline the edge is the straight segment.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ssd/geometry.hpp"
#include "ssd/two_edge.hpp"

namespace ssd {

struct GeoEdge {
  int u = 0, v = 0;
  std::vector<Point> polyline;
  bool straight = false;  // polyline omitted in the file

  bool operator==(const GeoEdge&) const = default;
};

struct GeometricDrawing {
  std::vector<Point> vertices;
  std::vector<GeoEdge> edges;

  int n() const { return static_cast<int>(vertices.size()); }
  bool complete() const;  // every pair of vertices joined by exactly one edge
  bool operator==(const GeometricDrawing&) const = default;
};

// One crossing between two edges, with positions along both polylines.
struct GeoCrossing {
  Point at;
  int seg_a = 0, seg_b = 0;
  Rational t_a, t_b;
  int sign = 0;  // +1 when (direction of a, direction of b) is counterclockwise
};

// Throws FormatError, DegenerateIncidence.
GeometricDrawing parse_gdr(std::string_view text);
std::string serialize_gdr(const GeometricDrawing& gd);
GeometricDrawing read_gdr(const std::string& path);

// Checks the general-position invariants; throws DegenerateIncidence.
void check_general_position(const GeometricDrawing& gd);

std::vector<GeoCrossing> crossings_between(const GeometricDrawing& gd, int a, int b);

// D(e, e') for e = edge a and e' = edge b, with every other vertex placed
// as a marker in its face. Deadlock pairs get the unbounded face as outer.
TwoEdgeDrawing induced_pair(const GeometricDrawing& gd, int a, int b);

struct VerifyOptions {
  bool all_lenses = false;
  int jobs = 1;
};

struct PairReport {
  int a = 0, b = 0;
  bool adjacent = false;
  int crossings = 0;
  int lenses = 0;
  std::vector<int> empty_lenses;  // bag indices
  std::vector<FaceId> empty_two_gons;  // with all_lenses: other empty 2-sided faces
  bool deadlock = false;
  std::optional<bool> spiral;  // checked on complete passing drawings
  std::string encoding;
};

struct Finding {
  std::string kind;  // adjacent-crossing, empty-lens, pair-bound, total-bound, inconsistency
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  bool complete = false;
  bool star_simple = true;
  std::vector<PairReport> pairs;  // every pair of edges, a < b
  long long total_crossings = 0;
  std::optional<BigInt> pair_bound;   // 3 (n - 4)!, n >= 4
  std::optional<BigInt> total_bound;  // n!
  std::vector<Finding> violations;

  bool pass() const { return violations.empty(); }
};

VerificationReport verify(const GeometricDrawing& gd, const VerifyOptions& options = {});
nlohmann::ordered_json report_json(const VerificationReport& report);

}  // namespace ssd
