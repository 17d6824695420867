#pragma once

// Drawings of two independent edges e and e'.
//
// e' is thought of as horizontal, oriented left to right; its crossings with
// e are xi_1..xi_N in that order. An Encoding lists the xi indices in the
// order e meets them and one sign per crossing (indexed by xi). The plane
// drawing is recovered up to homeomorphism by TwoCurveMap::build plus the
// choice of an outer face.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssd/curve_map.hpp"

namespace ssd {

struct Encoding {
  std::vector<int> order_e;  // 1-based xi indices along e
  std::vector<int> signs;    // signs[i - 1] is the sign of xi_i

  int crossings() const { return static_cast<int>(order_e.size()); }
  auto operator<=>(const Encoding&) const = default;
};

struct TwoEdgeDrawing {
  Encoding encoding;
  TwoCurveMap map;
  std::optional<FaceId> outer;
  bool outer_explicit = false;
  std::vector<FaceId> points;  // marker points, one face each

  int crossings() const { return encoding.crossings(); }
  // Position (1-based) of xi_i along e.
  int e_position(int xi) const { return e_positions[xi]; }

  // e' edge i runs from xi_i to xi_{i+1} (xi_0 = a, xi_{N+1} = b).
  Dart ep_dart(int edge, bool forward = true) const { return 2 * edge + (forward ? 0 : 1); }
  // e edge j runs from the j-th to the (j+1)-th crossing along e
  // (position 0 = u0, position N+1 = u1).
  Dart e_dart(int edge, bool forward = true) const {
    return 2 * (crossings() + 1) + 2 * edge + (forward ? 0 : 1);
  }

  std::vector<int> e_positions;  // xi -> position along e; slot 0 unused
};

struct AutoLens {
  explicit AutoLens() = default;
};

// Builds and checks a drawing. Without an explicit outer face the outer face
// is the face shared by all four endpoints; deadlock drawings then carry no
// outer face and every operation that needs one throws NoOuterFace.
// Throws MalformedEncoding, EulerViolation, InvalidOuter, BadPointFace.
TwoEdgeDrawing validate(const Encoding& encoding, const std::vector<FaceId>& points = {},
                        std::optional<FaceId> outer = std::nullopt);
// Same, placing one marker in every lens. Throws NoOuterFace on deadlocks
// without an explicit outer face.
TwoEdgeDrawing validate(const Encoding& encoding, AutoLens, std::optional<FaceId> outer = std::nullopt);

// Face of each endpoint: a, b, u0, u1.
std::array<FaceId, 4> endpoint_faces(const TwoEdgeDrawing& d);

struct Bag {
  int index = 0;                 // i in 1..N-1
  int gap_edge = 0;              // e' edge between xi_i and xi_{i+1}; equals index
  std::vector<int> piece_edges;  // e edges of h_i
  std::vector<FaceId> interior;  // sorted
  bool lens = false;             // h_i has no crossing
};

// Bags ordered by index (bag i at position i - 1). Throws NoOuterFace.
std::vector<Bag> bags(const TwoEdgeDrawing& d);

struct LaminarForest {
  // Indexed by bag index; slot 0 unused. parent 0 means root.
  std::vector<int> parent;
  std::vector<bool> lens;
  std::vector<int> depth;  // root bags have depth 1

  // Bag indices from `bag` up to its root.
  std::vector<int> chain(int bag) const;
};

// Throws LaminarityViolation if two bags overlap without nesting.
LaminarForest laminar_forest(const TwoEdgeDrawing& d, const std::vector<Bag>& bags);
LaminarForest laminar_forest(const TwoEdgeDrawing& d);

// Bag indices i with xi_i, xi_{i+1} consecutive along e as well.
std::vector<int> lenses(const TwoEdgeDrawing& d);
// The single face of a lens. Throws NoOuterFace.
FaceId lens_face(const TwoEdgeDrawing& d, int lens);

bool is_deadlock(const TwoEdgeDrawing& d);

struct HittingReport {
  int hitting_number = 0;
  bool ok = true;
  std::vector<int> empty_lenses;
};

HittingReport check_hitting(const TwoEdgeDrawing& d);

struct CurveRoute {
  int lens = 0;
  Vertex target = kEStart;
  std::vector<int> gaps;          // e' edges crossed, in route order
  std::vector<Dart> crossed;      // exited side of each crossing
  std::vector<FaceId> face_path;  // faces visited, starting in the lens
};

// Curve from inside `lens` to the endpoint `target` (kEStart or kEEnd) that
// avoids e and crosses e' as few times as possible (breadth-first over the
// faces, darts taken in boundary order). Throws DeadlockDrawing.
CurveRoute minimal_curve(const TwoEdgeDrawing& d, int lens, Vertex target);

// Lays the route over D(e, e'), erases e, and reports whether the route
// start, its target and both ends of e' fail to share one region.
bool route_deadlocks(const TwoEdgeDrawing& d, const CurveRoute& route);

enum class SpiralMode : std::uint8_t { kEitherEndpoint, kBothEndpoints };

struct SpiralOptions {
  SpiralMode mode = SpiralMode::kEitherEndpoint;
  // Experimental: curves from a lens to an endpoint of e' that avoid e'
  // (roles of e and e' swapped).
  bool e_prime_side = false;
};

// Throws DeadlockDrawing.
bool is_spiral(const TwoEdgeDrawing& d, SpiralOptions options = {});

struct AdmissibilityOptions {
  bool exact_k = false;  // hitting number == k instead of <= k
  SpiralOptions spiral;
};

bool admissible(const TwoEdgeDrawing& d, int k, AdmissibilityOptions options = {});

// The drawing with the roles of e and e' exchanged.
Encoding swap_roles(const Encoding& encoding);

// Image of an encoding under reversing e, reversing e' and mirroring.
Encoding transform(const Encoding& encoding, bool reverse_e, bool reverse_ep, bool mirror);
// Lexicographically smallest image over the 8 symmetries.
Encoding canonical_encoding(const Encoding& encoding);
std::string encoding_string(const Encoding& encoding);
std::string canonical_form(const Encoding& encoding);
std::string canonical_form(const TwoEdgeDrawing& d);

}  // namespace ssd
