#include "ssd/two_edge.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "ssd/error.hpp"
#include "union_find.hpp"

namespace ssd {

namespace {

TwoEdgeDrawing build_drawing(const Encoding& encoding, std::optional<FaceId> outer) {
  const int n = encoding.crossings();
  if (static_cast<int>(encoding.signs.size()) != n) {
    throw Error(ErrorCode::kMalformedEncoding, "signs and order_e differ in length");
  }
  std::vector<int> along_ep(n);
  std::iota(along_ep.begin(), along_ep.end(), 1);

  TwoEdgeDrawing d;
  d.encoding = encoding;
  d.map = TwoCurveMap::build(encoding.order_e, along_ep, encoding.signs);
  d.e_positions.assign(n + 1, 0);
  for (int p = 0; p < n; ++p) d.e_positions[encoding.order_e[p]] = p + 1;

  const auto ends = endpoint_faces(d);
  const bool common = std::all_of(ends.begin(), ends.end(), [&](FaceId f) { return f == ends[0]; });
  if (outer) {
    if (!d.map.has_face(*outer)) {
      throw Error(ErrorCode::kInvalidOuter, "outer face " + std::to_string(outer->key) + " does not exist");
    }
    if (common && *outer != ends[0]) {
      throw Error(ErrorCode::kInvalidOuter, "outer face must be the face shared by the endpoints");
    }
    d.outer = outer;
    d.outer_explicit = true;
  } else if (common) {
    d.outer = ends[0];
  }
  return d;
}

FaceId require_outer(const TwoEdgeDrawing& d) {
  if (!d.outer) {
    throw Error(ErrorCode::kNoOuterFace, "deadlock drawing without an explicit outer face");
  }
  return *d.outer;
}

// Faces strictly inside the Jordan curve g_i + h_i, as face indices.
std::vector<int> bag_interior(const TwoEdgeDrawing& d, int i, std::vector<int>* piece_out) {
  const TwoCurveMap& m = d.map;
  const int p = d.e_position(i);
  const int q = d.e_position(i + 1);
  std::vector<char> on_cycle(m.edge_count(), 0);
  on_cycle[d.ep_dart(i) / 2] = 1;
  for (int j = std::min(p, q); j < std::max(p, q); ++j) {
    on_cycle[d.e_dart(j) / 2] = 1;
    if (piece_out) piece_out->push_back(j);
  }
  detail::UnionFind uf(m.face_count());
  for (int edge = 0; edge < m.edge_count(); ++edge) {
    if (on_cycle[edge]) continue;
    uf.unite(m.face_index(2 * edge), m.face_index(2 * edge + 1));
  }
  const int outer_class = uf.find(m.face_index(require_outer(d).key));
  std::vector<int> inside;
  int other_class = -1;
  for (int f = 0; f < m.face_count(); ++f) {
    const int c = uf.find(f);
    if (c == outer_class) continue;
    if (other_class < 0) other_class = c;
    if (c != other_class) {
      throw Error(ErrorCode::kLaminarityViolation,
                  "boundary of bag " + std::to_string(i) + " is not a Jordan curve");
    }
    inside.push_back(f);
  }
  return inside;
}

}  // namespace

TwoEdgeDrawing validate(const Encoding& encoding, const std::vector<FaceId>& points,
                        std::optional<FaceId> outer) {
  TwoEdgeDrawing d = build_drawing(encoding, outer);
  for (FaceId f : points) {
    if (!d.map.has_face(f)) {
      throw Error(ErrorCode::kBadPointFace, "marker references missing face " + std::to_string(f.key));
    }
  }
  d.points = points;
  return d;
}

TwoEdgeDrawing validate(const Encoding& encoding, AutoLens, std::optional<FaceId> outer) {
  TwoEdgeDrawing d = build_drawing(encoding, outer);
  require_outer(d);
  for (int lens : lenses(d)) d.points.push_back(lens_face(d, lens));
  return d;
}

std::array<FaceId, 4> endpoint_faces(const TwoEdgeDrawing& d) {
  return {d.map.endpoint_face(kEPrimeStart), d.map.endpoint_face(kEPrimeEnd),
          d.map.endpoint_face(kEStart), d.map.endpoint_face(kEEnd)};
}

std::vector<Bag> bags(const TwoEdgeDrawing& d) {
  require_outer(d);
  const int n = d.crossings();
  std::vector<Bag> out;
  for (int i = 1; i < n; ++i) {
    Bag bag;
    bag.index = i;
    bag.gap_edge = i;
    for (int f : bag_interior(d, i, &bag.piece_edges)) bag.interior.push_back(d.map.faces()[f].id);
    bag.lens = bag.piece_edges.size() == 1;
    out.push_back(std::move(bag));
  }
  return out;
}

std::vector<int> LaminarForest::chain(int bag) const {
  std::vector<int> out;
  for (int b = bag; b != 0; b = parent[b]) out.push_back(b);
  return out;
}

LaminarForest laminar_forest(const TwoEdgeDrawing& d, const std::vector<Bag>& bag_list) {
  const int n = d.crossings();
  const int faces = d.map.face_count();
  const int words = (faces + 63) / 64;
  LaminarForest forest;
  forest.parent.assign(std::max(n, 1), 0);
  forest.lens.assign(std::max(n, 1), false);
  forest.depth.assign(std::max(n, 1), 0);

  std::vector<std::vector<std::uint64_t>> sets(bag_list.size(), std::vector<std::uint64_t>(words, 0));
  std::vector<int> sizes(bag_list.size(), 0);
  for (std::size_t b = 0; b < bag_list.size(); ++b) {
    for (FaceId f : bag_list[b].interior) {
      const int idx = d.map.face_index(f.key);
      sets[b][idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    sizes[b] = static_cast<int>(bag_list[b].interior.size());
    forest.lens[bag_list[b].index] = bag_list[b].lens;
  }

  for (std::size_t a = 0; a < bag_list.size(); ++a) {
    int best = -1;
    for (std::size_t b = 0; b < bag_list.size(); ++b) {
      if (a == b) continue;
      bool meet = false, a_in_b = true, b_in_a = true;
      for (int w = 0; w < words; ++w) {
        const std::uint64_t x = sets[a][w], y = sets[b][w];
        meet |= (x & y) != 0;
        a_in_b &= (x & ~y) == 0;
        b_in_a &= (y & ~x) == 0;
      }
      if (!meet) continue;
      if (!a_in_b && !b_in_a) {
        throw Error(ErrorCode::kLaminarityViolation,
                    "bags " + std::to_string(bag_list[a].index) + " and " +
                        std::to_string(bag_list[b].index) + " overlap without nesting");
      }
      if (a_in_b && b_in_a) {
        throw Error(ErrorCode::kLaminarityViolation,
                    "bags " + std::to_string(bag_list[a].index) + " and " +
                        std::to_string(bag_list[b].index) + " have the same interior");
      }
      if (a_in_b && (best < 0 || sizes[b] < sizes[best])) best = static_cast<int>(b);
    }
    forest.parent[bag_list[a].index] = best < 0 ? 0 : bag_list[best].index;
  }
  for (const Bag& bag : bag_list) forest.depth[bag.index] = static_cast<int>(forest.chain(bag.index).size());
  return forest;
}

LaminarForest laminar_forest(const TwoEdgeDrawing& d) { return laminar_forest(d, bags(d)); }

std::vector<int> lenses(const TwoEdgeDrawing& d) {
  std::vector<int> out;
  for (int i = 1; i < d.crossings(); ++i) {
    if (std::abs(d.e_position(i) - d.e_position(i + 1)) == 1) out.push_back(i);
  }
  return out;
}

FaceId lens_face(const TwoEdgeDrawing& d, int lens) {
  const std::vector<int> inside = bag_interior(d, lens, nullptr);
  for (bool forward : {true, false}) {
    const int f = d.map.face_index(d.ep_dart(lens, forward));
    if (std::binary_search(inside.begin(), inside.end(), f)) return d.map.faces()[f].id;
  }
  throw Error(ErrorCode::kLaminarityViolation, "lens " + std::to_string(lens) + " has no face at its gap");
}

bool is_deadlock(const TwoEdgeDrawing& d) {
  const auto ends = endpoint_faces(d);
  return !std::all_of(ends.begin(), ends.end(), [&](FaceId f) { return f == ends[0]; });
}

HittingReport check_hitting(const TwoEdgeDrawing& d) {
  HittingReport r;
  for (int lens : lenses(d)) {
    ++r.hitting_number;
    const FaceId f = lens_face(d, lens);
    if (std::find(d.points.begin(), d.points.end(), f) == d.points.end()) {
      r.ok = false;
      r.empty_lenses.push_back(lens);
    }
  }
  return r;
}

CurveRoute minimal_curve(const TwoEdgeDrawing& d, int lens, Vertex target) {
  if (is_deadlock(d)) throw Error(ErrorCode::kDeadlockDrawing, "minimal curves need a deadlock-free drawing");
  if (target != kEStart && target != kEEnd) {
    throw Error(ErrorCode::kNotAnEndpoint, "route target must be an endpoint of e");
  }
  const TwoCurveMap& m = d.map;
  const int start = m.face_index(lens_face(d, lens).key);
  const int goal = m.face_index(m.endpoint_face(target).key);

  std::vector<Dart> via(m.face_count(), -1);
  std::vector<char> seen(m.face_count(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty() && !seen[goal]) {
    const int f = queue.front();
    queue.pop_front();
    for (Dart dart : m.faces()[f].darts) {
      if (m.label(dart).curve != Curve::kEPrime) continue;
      const int g = m.face_index(m.twin(dart));
      if (seen[g]) continue;
      seen[g] = 1;
      via[g] = dart;
      queue.push_back(g);
    }
  }
  if (!seen[goal]) {
    throw Error(ErrorCode::kDisconnectedRoute, "endpoint unreachable without crossing e");
  }

  CurveRoute route;
  route.lens = lens;
  route.target = target;
  for (int f = goal; f != start; f = m.face_index(via[f])) route.crossed.push_back(via[f]);
  std::reverse(route.crossed.begin(), route.crossed.end());
  route.face_path.push_back(m.faces()[start].id);
  for (Dart dart : route.crossed) {
    route.gaps.push_back(m.label(dart).segment);
    route.face_path.push_back(m.face_of(m.twin(dart)));
  }
  return route;
}

bool route_deadlocks(const TwoEdgeDrawing& d, const CurveRoute& route) {
  RouteSpec spec;
  spec.start = route.face_path.front();
  spec.crossed = route.crossed;
  spec.end = route.target;
  const RouteOverlay overlay = insert_route(d.map, spec);
  const TwoCurveMap& m = overlay.map;
  const RegionQuotient q = delete_curve(m, Curve::kE);
  const FaceId x = q.region(m.face_of(m.vertex_dart(overlay.start_vertex)));
  FaceId u{};
  for (Dart dart : m.darts_around(route.target)) {
    if (m.label(dart).curve == Curve::kRoute) u = q.region(m.face_of(dart));
  }
  const FaceId a = q.region(m.endpoint_face(kEPrimeStart));
  const FaceId b = q.region(m.endpoint_face(kEPrimeEnd));
  return !(x == u && u == a && a == b);
}

bool is_spiral(const TwoEdgeDrawing& d, SpiralOptions options) {
  if (is_deadlock(d)) throw Error(ErrorCode::kDeadlockDrawing, "spirals are defined for deadlock-free drawings");
  if (options.e_prime_side) {
    options.e_prime_side = false;
    return is_spiral(validate(swap_roles(d.encoding)), options);
  }
  for (int lens : lenses(d)) {
    int deadlocked = 0;
    for (Vertex target : {kEStart, kEEnd}) {
      if (route_deadlocks(d, minimal_curve(d, lens, target))) {
        ++deadlocked;
        if (options.mode == SpiralMode::kEitherEndpoint) return true;
      }
    }
    if (deadlocked == 2) return true;
  }
  return false;
}

bool admissible(const TwoEdgeDrawing& d, int k, AdmissibilityOptions options) {
  if (is_deadlock(d)) return false;
  const int hitting = static_cast<int>(lenses(d).size());
  if (options.exact_k ? hitting != k : hitting > k) return false;
  return !is_spiral(d, options.spiral);
}

Encoding swap_roles(const Encoding& encoding) {
  const int n = encoding.crossings();
  Encoding out;
  out.order_e.assign(n, 0);
  out.signs.assign(n, 0);
  for (int p = 1; p <= n; ++p) {
    const int xi = encoding.order_e[p - 1];
    out.order_e[xi - 1] = p;
    out.signs[p - 1] = -encoding.signs[xi - 1];
  }
  return out;
}

Encoding transform(const Encoding& encoding, bool reverse_e, bool reverse_ep, bool mirror) {
  Encoding t = encoding;
  const int n = t.crossings();
  auto negate = [&t] {
    for (int& s : t.signs) s = -s;
  };
  if (reverse_ep) {
    for (int& xi : t.order_e) xi = n + 1 - xi;
    std::reverse(t.signs.begin(), t.signs.end());
    negate();
  }
  if (reverse_e) {
    std::reverse(t.order_e.begin(), t.order_e.end());
    negate();
  }
  if (mirror) negate();
  return t;
}

Encoding canonical_encoding(const Encoding& encoding) {
  Encoding best = encoding;
  for (int g = 1; g < 8; ++g) {
    Encoding t = transform(encoding, g & 1, g & 2, g & 4);
    if (t < best) best = std::move(t);
  }
  return best;
}

std::string encoding_string(const Encoding& encoding) {
  std::string s = std::to_string(encoding.crossings()) + ":";
  for (std::size_t i = 0; i < encoding.order_e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(encoding.order_e[i]);
  }
  s += ':';
  for (int sign : encoding.signs) s += sign > 0 ? '+' : '-';
  return s;
}

std::string canonical_form(const Encoding& encoding) { return encoding_string(canonical_encoding(encoding)); }

std::string canonical_form(const TwoEdgeDrawing& d) { return canonical_form(d.encoding); }

}  // namespace ssd
