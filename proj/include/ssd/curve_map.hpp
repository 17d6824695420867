#pragma once

// Combinatorial maps of two simple curves in the plane (plus auxiliary
// routes laid over them).
//
// Darts are dense integers. Every dart has a twin (the same edge traversed
// the other way), an origin vertex and a counterclockwise rotation successor
// around that origin. The face to the left of a dart d continues with
// next_in_face(d) = rot_inv(twin(d)).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

namespace ssd {

using Dart = int;
using Vertex = int;

enum class Curve : std::uint8_t { kE = 0, kEPrime = 1, kRoute = 2 };

struct DartLabel {
  Curve curve = Curve::kE;
  // Index of the edge along its curve in the map the curve was built in.
  // Splitting an edge keeps the index of the original edge.
  int segment = 0;
};

// Smallest dart on the face cycle.
struct FaceId {
  Dart key = -1;
  auto operator<=>(const FaceId&) const = default;
  bool valid() const { return key >= 0; }
};

enum class VertexKind : std::uint8_t { kEndpoint, kCrossing, kRouteCrossing, kMarker };

struct Face {
  FaceId id;
  std::vector<Dart> darts;  // in boundary order starting at id.key
};

// Fixed vertex ids of a freshly built two-curve map.
inline constexpr Vertex kEPrimeStart = 0;  // a, left end of e'
inline constexpr Vertex kEPrimeEnd = 1;    // b, right end of e'
inline constexpr Vertex kEStart = 2;       // u0, first end of e
inline constexpr Vertex kEEnd = 3;         // u1, last end of e
inline constexpr Vertex crossing_vertex(int xi) { return 3 + xi; }  // xi is 1-based

class TwoCurveMap {
 public:
  TwoCurveMap() = default;

  // Builds the map of two curves e and e' crossing at the ids in order_ep.
  // order_e and order_ep list the same ids in order along e and e';
  // signs[j] is the orientation of crossing order_ep[j]: +1 when the frame
  // (direction of e, direction of e') is counterclockwise, giving the local
  // rotation (e-out, e'-out, e-in, e'-in).
  //
  // Vertex ids: a = 0, b = 1, u0 = 2, u1 = 3, then the j-th crossing along
  // e' is vertex 4 + j. Darts: e' edges first (edge j = darts 2j forward,
  // 2j+1 backward), then the e edges in the same scheme.
  //
  // Throws MalformedEncoding or EulerViolation.
  static TwoCurveMap build(std::span<const int> order_e, std::span<const int> order_ep,
                           std::span<const int> signs);

  int dart_count() const { return static_cast<int>(twin_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_kind_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int component_count() const { return components_; }
  bool euler_ok() const { return euler_ok_; }

  Dart twin(Dart d) const { return twin_[d]; }
  Dart rot(Dart d) const { return rot_[d]; }
  Dart rot_inv(Dart d) const { return rot_inv_[d]; }
  Dart next_in_face(Dart d) const { return rot_inv_[twin_[d]]; }
  Vertex origin(Dart d) const { return origin_[d]; }
  Vertex head(Dart d) const { return origin_[twin_[d]]; }
  const DartLabel& label(Dart d) const { return label_[d]; }

  VertexKind vertex_kind(Vertex v) const { return vertex_kind_[v]; }
  Dart vertex_dart(Vertex v) const { return vertex_dart_[v]; }
  int degree(Vertex v) const;
  std::vector<Dart> darts_around(Vertex v) const;  // counterclockwise

  FaceId face_of(Dart d) const { return faces_[face_index_[d]].id; }
  int face_index(Dart d) const { return face_index_[d]; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId id) const;
  bool has_face(FaceId id) const;

  // Unique face around a degree-1 vertex. Throws NotAnEndpoint.
  FaceId endpoint_face(Vertex v) const;

  // Number of e/e' crossings the map was built with.
  int base_crossings() const { return base_crossings_; }

  // Surgery primitives. They leave faces stale until retrace() is called.
  Vertex add_vertex(VertexKind kind);
  // Splits the edge of d at a new vertex c. Afterwards d runs origin(d) -> c
  // and the returned pair holds (c -> old head of d, c -> origin(d)).
  std::pair<Dart, Dart> split_edge(Dart d, VertexKind kind);
  // New edge from the corner after `from` (counterclockwise) to the corner
  // after `to`. Either side may be an isolated vertex instead of a corner.
  struct Corner {
    Dart dart = -1;        // insert after this dart, counterclockwise
    Vertex isolated = -1;  // or attach to this isolated vertex
    static Corner after(Dart d) { return {d, -1}; }
    static Corner at(Vertex v) { return {-1, v}; }
  };
  Dart insert_edge(Corner from, Corner to, DartLabel label);
  void retrace();

 private:
  void trace_faces();
  std::vector<int> count_components();  // component root per vertex

  std::vector<Dart> twin_, rot_, rot_inv_;
  std::vector<Vertex> origin_;
  std::vector<DartLabel> label_;
  std::vector<VertexKind> vertex_kind_;
  std::vector<Dart> vertex_dart_;  // -1 for isolated vertices

  std::vector<Face> faces_;
  std::vector<int> face_index_;
  int components_ = 0;
  bool euler_ok_ = false;
  int base_crossings_ = 0;
};

// A curve to lay over a map. Each crossed dart is exited from its left face
// into the left face of its twin; consecutive darts must share a face.
struct RouteSpec {
  std::variant<FaceId, Vertex> start;
  std::vector<Dart> crossed;
  Vertex end = -1;
};

struct RouteOverlay {
  TwoCurveMap map;
  Vertex start_vertex = -1;          // the new marker vertex, or the given start
  std::vector<Vertex> crossing_vertices;  // in route order
};

// Throws DisconnectedRoute when the crossing sequence is not face-consistent.
RouteOverlay insert_route(const TwoCurveMap& map, const RouteSpec& route);

struct RegionQuotient {
  std::map<FaceId, FaceId> region_of;  // region id = smallest member face
  int region_count = 0;
  FaceId region(FaceId f) const { return region_of.at(f); }
};

// Regions left after erasing every edge of the given curve. Throws UnknownLabel.
RegionQuotient delete_curve(const TwoCurveMap& map, Curve curve);

}  // namespace ssd
