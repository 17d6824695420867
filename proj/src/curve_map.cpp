#include "ssd/curve_map.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "ssd/error.hpp"
#include "union_find.hpp"

namespace ssd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedEncoding: return "MalformedEncoding";
    case ErrorCode::kEulerViolation: return "EulerViolation";
    case ErrorCode::kNotAnEndpoint: return "NotAnEndpoint";
    case ErrorCode::kDisconnectedRoute: return "DisconnectedRoute";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kNoOuterFace: return "NoOuterFace";
    case ErrorCode::kInvalidOuter: return "InvalidOuter";
    case ErrorCode::kBadPointFace: return "BadPointFace";
    case ErrorCode::kLaminarityViolation: return "LaminarityViolation";
    case ErrorCode::kDeadlockDrawing: return "DeadlockDrawing";
    case ErrorCode::kPropertyViolation: return "PropertyViolation";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kEnhancedUndefined: return "EnhancedUndefined";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kDegenerateIncidence: return "DegenerateIncidence";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kWrapNotRenderable: return "WrapNotRenderable";
  }
  return "Unknown";
}

using detail::UnionFind;

TwoCurveMap TwoCurveMap::build(std::span<const int> order_e, std::span<const int> order_ep,
                               std::span<const int> signs) {
  const int n = static_cast<int>(order_ep.size());
  if (static_cast<int>(order_e.size()) != n || static_cast<int>(signs.size()) != n) {
    throw Error(ErrorCode::kMalformedEncoding, "order_e, order_ep and signs differ in length");
  }
  std::map<int, int> ep_pos;  // id -> 1-based position along e'
  for (int j = 0; j < n; ++j) {
    if (!ep_pos.emplace(order_ep[j], j + 1).second) {
      throw Error(ErrorCode::kMalformedEncoding, "duplicate crossing id along e'");
    }
    if (signs[j] != 1 && signs[j] != -1) {
      throw Error(ErrorCode::kMalformedEncoding, "signs must be +1 or -1");
    }
  }
  std::vector<int> e_to_ep(n + 2, 0);  // e-position -> e'-position
  std::set<int> seen;
  for (int p = 0; p < n; ++p) {
    auto it = ep_pos.find(order_e[p]);
    if (it == ep_pos.end() || !seen.insert(order_e[p]).second) {
      throw Error(ErrorCode::kMalformedEncoding, "order_e is not a permutation of the e' ids");
    }
    e_to_ep[p + 1] = it->second;
  }

  TwoCurveMap m;
  m.base_crossings_ = n;
  const int darts = 4 * (n + 1);
  m.twin_.resize(darts);
  m.rot_.resize(darts);
  m.rot_inv_.resize(darts);
  m.origin_.resize(darts);
  m.label_.resize(darts);
  m.vertex_kind_.assign(n + 4, VertexKind::kCrossing);
  m.vertex_dart_.assign(n + 4, -1);
  for (Vertex v = 0; v < 4; ++v) m.vertex_kind_[v] = VertexKind::kEndpoint;

  auto ep_fwd = [](int j) { return 2 * j; };
  auto ep_bwd = [](int j) { return 2 * j + 1; };
  const int e_base = 2 * (n + 1);
  auto e_fwd = [e_base](int j) { return e_base + 2 * j; };
  auto e_bwd = [e_base](int j) { return e_base + 2 * j + 1; };
  auto ep_vertex = [n](int j) { return j == 0 ? kEPrimeStart : (j == n + 1 ? kEPrimeEnd : crossing_vertex(j)); };
  auto e_vertex = [&](int p) { return p == 0 ? kEStart : (p == n + 1 ? kEEnd : crossing_vertex(e_to_ep[p])); };

  for (int j = 0; j <= n; ++j) {
    m.twin_[ep_fwd(j)] = ep_bwd(j);
    m.twin_[ep_bwd(j)] = ep_fwd(j);
    m.origin_[ep_fwd(j)] = ep_vertex(j);
    m.origin_[ep_bwd(j)] = ep_vertex(j + 1);
    m.label_[ep_fwd(j)] = m.label_[ep_bwd(j)] = DartLabel{Curve::kEPrime, j};

    m.twin_[e_fwd(j)] = e_bwd(j);
    m.twin_[e_bwd(j)] = e_fwd(j);
    m.origin_[e_fwd(j)] = e_vertex(j);
    m.origin_[e_bwd(j)] = e_vertex(j + 1);
    m.label_[e_fwd(j)] = m.label_[e_bwd(j)] = DartLabel{Curve::kE, j};
  }

  auto link = [&m](std::initializer_list<Dart> cycle) {
    std::vector<Dart> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Dart from = c[i];
      const Dart to = c[(i + 1) % c.size()];
      m.rot_[from] = to;
      m.rot_inv_[to] = from;
    }
    m.vertex_dart_[m.origin_[c.front()]] = c.front();
  };
  link({ep_fwd(0)});
  link({ep_bwd(n)});
  link({e_fwd(0)});
  link({e_bwd(n)});
  for (int p = 1; p <= n; ++p) {
    const int i = e_to_ep[p];
    const Dart e_out = e_fwd(p), e_in = e_bwd(p - 1);
    const Dart ep_out = ep_fwd(i), ep_in = ep_bwd(i - 1);
    if (signs[i - 1] > 0) {
      link({e_out, ep_out, e_in, ep_in});
    } else {
      link({e_out, ep_in, e_in, ep_out});
    }
  }

  m.retrace();
  if (!m.euler_ok_) {
    throw Error(ErrorCode::kEulerViolation,
                "encoding has V - E + F = " +
                    std::to_string(m.vertex_count() - m.edge_count() + m.face_count()) +
                    ", expected 2 (the rotation system has positive genus)");
  }
  return m;
}

int TwoCurveMap::degree(Vertex v) const {
  const Dart first = vertex_dart_[v];
  if (first < 0) return 0;
  int deg = 0;
  Dart d = first;
  do {
    ++deg;
    d = rot_[d];
  } while (d != first);
  return deg;
}

std::vector<Dart> TwoCurveMap::darts_around(Vertex v) const {
  std::vector<Dart> out;
  const Dart first = vertex_dart_[v];
  if (first < 0) return out;
  Dart d = first;
  do {
    out.push_back(d);
    d = rot_[d];
  } while (d != first);
  return out;
}

const Face& TwoCurveMap::face(FaceId id) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), id,
                             [](const Face& f, FaceId key) { return f.id < key; });
  if (it == faces_.end() || it->id != id) {
    throw Error(ErrorCode::kBadPointFace, "no face with key " + std::to_string(id.key));
  }
  return *it;
}

bool TwoCurveMap::has_face(FaceId id) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), id,
                             [](const Face& f, FaceId key) { return f.id < key; });
  return it != faces_.end() && it->id == id;
}

FaceId TwoCurveMap::endpoint_face(Vertex v) const {
  if (v < 0 || v >= vertex_count() || degree(v) != 1) {
    throw Error(ErrorCode::kNotAnEndpoint, "vertex " + std::to_string(v) + " does not have degree 1");
  }
  return face_of(vertex_dart_[v]);
}

Vertex TwoCurveMap::add_vertex(VertexKind kind) {
  vertex_kind_.push_back(kind);
  vertex_dart_.push_back(-1);
  return vertex_count() - 1;
}

std::pair<Dart, Dart> TwoCurveMap::split_edge(Dart d, VertexKind kind) {
  const Dart t = twin_[d];
  const Vertex c = add_vertex(kind);
  const Dart d2 = dart_count();
  const Dart t2 = d2 + 1;
  for (int i = 0; i < 2; ++i) {
    twin_.push_back(-1);
    rot_.push_back(-1);
    rot_inv_.push_back(-1);
    origin_.push_back(c);
  }
  label_.push_back(label_[t]);
  label_.push_back(label_[d]);
  twin_[d] = d2;
  twin_[d2] = d;
  twin_[t] = t2;
  twin_[t2] = t;
  rot_[d2] = t2;
  rot_[t2] = d2;
  rot_inv_[d2] = t2;
  rot_inv_[t2] = d2;
  vertex_dart_[c] = d2;
  return {t2, d2};
}

Dart TwoCurveMap::insert_edge(Corner from, Corner to, DartLabel label) {
  const Dart n1 = dart_count();
  const Dart n2 = n1 + 1;
  auto attach = [this](Dart nd, const Corner& corner) {
    if (corner.dart >= 0) {
      const Dart a = corner.dart;
      origin_[nd] = origin_[a];
      const Dart b = rot_[a];
      rot_[a] = nd;
      rot_inv_[nd] = a;
      rot_[nd] = b;
      rot_inv_[b] = nd;
    } else {
      const Vertex v = corner.isolated;
      origin_[nd] = v;
      if (vertex_dart_[v] >= 0) {
        // Corner at a non-isolated vertex must be given as a dart.
        throw Error(ErrorCode::kDisconnectedRoute, "vertex corner is ambiguous");
      }
      rot_[nd] = nd;
      rot_inv_[nd] = nd;
      vertex_dart_[v] = nd;
    }
  };
  for (int i = 0; i < 2; ++i) {
    twin_.push_back(-1);
    rot_.push_back(-1);
    rot_inv_.push_back(-1);
    origin_.push_back(-1);
    label_.push_back(label);
  }
  twin_[n1] = n2;
  twin_[n2] = n1;
  attach(n1, from);
  attach(n2, to);
  return n1;
}

void TwoCurveMap::retrace() {
  trace_faces();
  const std::vector<int> comp = count_components();
  int isolated = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) isolated += vertex_dart_[v] < 0;
  // Each component must be a sphere on its own (an isolated vertex counts as
  // one face).
  euler_ok_ = vertex_count() - edge_count() + face_count() + isolated == 2 * components_;
  if (components_ < 2 || !euler_ok_) return;

  // Components that are trees all sit in one plane face; merge their orbits.
  std::vector<int> orbits(vertex_count(), 0);
  for (const Face& f : faces_) ++orbits[comp[origin_[f.darts.front()]]];
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (vertex_dart_[v] >= 0 && orbits[comp[v]] != 1) return;
  }
  Face merged;
  merged.id = faces_.front().id;
  for (const Face& f : faces_) merged.darts.insert(merged.darts.end(), f.darts.begin(), f.darts.end());
  faces_.assign(1, std::move(merged));
  face_index_.assign(dart_count(), 0);
}

void TwoCurveMap::trace_faces() {
  const int n = dart_count();
  faces_.clear();
  face_index_.assign(n, -1);
  for (Dart start = 0; start < n; ++start) {
    if (face_index_[start] >= 0) continue;
    Face f;
    f.id = FaceId{start};
    const int idx = static_cast<int>(faces_.size());
    Dart d = start;
    do {
      face_index_[d] = idx;
      f.darts.push_back(d);
      d = next_in_face(d);
    } while (d != start);
    faces_.push_back(std::move(f));
  }
}

std::vector<int> TwoCurveMap::count_components() {
  UnionFind uf(vertex_count());
  int comps = vertex_count();
  for (Dart d = 0; d < dart_count(); ++d) {
    if (uf.unite(origin_[d], origin_[twin_[d]])) --comps;
  }
  components_ = comps;
  std::vector<int> root(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) root[v] = uf.find(v);
  return root;
}

RouteOverlay insert_route(const TwoCurveMap& base, const RouteSpec& route) {
  const int m = static_cast<int>(route.crossed.size());
  std::set<int> edges;
  for (Dart d : route.crossed) {
    if (d < 0 || d >= base.dart_count()) {
      throw Error(ErrorCode::kDisconnectedRoute, "crossed dart out of range");
    }
    if (base.label(d).curve != Curve::kEPrime) {
      throw Error(ErrorCode::kDisconnectedRoute, "a route may only cross e'");
    }
    if (!edges.insert(std::min(d, base.twin(d))).second) {
      throw Error(ErrorCode::kDisconnectedRoute, "a route may cross each edge at most once");
    }
  }
  for (int j = 0; j + 1 < m; ++j) {
    if (base.face_of(base.twin(route.crossed[j])) != base.face_of(route.crossed[j + 1])) {
      throw Error(ErrorCode::kDisconnectedRoute,
                  "crossing " + std::to_string(j) + " and " + std::to_string(j + 1) +
                      " do not border a common face");
    }
  }
  if (route.end < 0 || route.end >= base.vertex_count()) {
    throw Error(ErrorCode::kDisconnectedRoute, "end vertex out of range");
  }

  RouteOverlay out;
  out.map = base;
  TwoCurveMap& map = out.map;

  std::optional<Dart> start_face_dart;
  if (std::holds_alternative<FaceId>(route.start)) {
    const FaceId f = std::get<FaceId>(route.start);
    if (!base.has_face(f)) throw Error(ErrorCode::kDisconnectedRoute, "unknown start face");
    if (m > 0 && base.face_of(route.crossed[0]) != f) {
      throw Error(ErrorCode::kDisconnectedRoute, "first crossing does not border the start face");
    }
    start_face_dart = f.key;
  }

  std::vector<Dart> entry(m), exit(m);
  for (int j = 0; j < m; ++j) {
    auto [forward, backward] = map.split_edge(route.crossed[j], VertexKind::kRouteCrossing);
    entry[j] = forward;
    exit[j] = backward;
    out.crossing_vertices.push_back(map.origin(forward));
  }

  auto corner_at = [&map](Vertex v, FaceId face) -> Dart {
    for (Dart d : map.darts_around(v)) {
      if (map.face_of(d) == face) return d;
    }
    throw Error(ErrorCode::kDisconnectedRoute,
                "vertex " + std::to_string(v) + " is not on the face the route reaches");
  };

  int piece = 0;
  map.retrace();
  // First piece: start station to first entry corner (or to the end vertex).
  {
    TwoCurveMap::Corner from;
    FaceId face;
    if (m > 0) {
      face = map.face_of(entry[0]);
    } else if (start_face_dart) {
      face = map.face_of(*start_face_dart);
    }
    if (std::holds_alternative<FaceId>(route.start)) {
      out.start_vertex = map.add_vertex(VertexKind::kMarker);
      from = TwoCurveMap::Corner::at(out.start_vertex);
    } else {
      out.start_vertex = std::get<Vertex>(route.start);
      if (m == 0) {
        throw Error(ErrorCode::kDisconnectedRoute, "vertex-to-vertex route needs a crossing");
      }
      from = TwoCurveMap::Corner::after(corner_at(out.start_vertex, face));
    }
    TwoCurveMap::Corner to;
    if (m > 0) {
      to = TwoCurveMap::Corner::after(entry[0]);
    } else {
      to = TwoCurveMap::Corner::after(corner_at(route.end, face));
    }
    map.insert_edge(from, to, DartLabel{Curve::kRoute, piece++});
  }
  for (int j = 0; j < m; ++j) {
    map.retrace();
    const FaceId face = map.face_of(exit[j]);
    TwoCurveMap::Corner to;
    if (j + 1 < m) {
      if (map.face_of(entry[j + 1]) != face) {
        throw Error(ErrorCode::kDisconnectedRoute, "route re-enters a face on the wrong side");
      }
      to = TwoCurveMap::Corner::after(entry[j + 1]);
    } else {
      to = TwoCurveMap::Corner::after(corner_at(route.end, face));
    }
    map.insert_edge(TwoCurveMap::Corner::after(exit[j]), to, DartLabel{Curve::kRoute, piece++});
  }
  map.retrace();
  return out;
}

RegionQuotient delete_curve(const TwoCurveMap& map, Curve curve) {
  UnionFind uf(map.face_count());
  bool found = false;
  for (Dart d = 0; d < map.dart_count(); ++d) {
    if (map.label(d).curve != curve) continue;
    found = true;
    uf.unite(map.face_index(d), map.face_index(map.twin(d)));
  }
  if (!found) throw Error(ErrorCode::kUnknownLabel, "no dart carries the requested curve label");
  RegionQuotient q;
  // Faces are stored in increasing key order, and union-find roots are the
  // smallest index, so the root's face is the smallest member.
  for (int i = 0; i < map.face_count(); ++i) {
    const int root = uf.find(i);
    if (root == i) ++q.region_count;
    q.region_of[map.faces()[i].id] = map.faces()[root].id;
  }
  return q;
}

}  // namespace ssd
