#include "ssd/properties.hpp"

#include <algorithm>
#include <set>

#include "ssd/bounds.hpp"
#include "ssd/error.hpp"

namespace ssd {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::kPropertyViolation, "route extraction: " + what);
}

}  // namespace

RoutePair extract_route_pair(const TwoEdgeDrawing& d, const CurveRoute& route) {
  RoutePair out;
  out.route = route;
  out.overlay = insert_route(d.map, RouteSpec{route.face_path.front(), route.crossed, route.target});
  const TwoCurveMap& m = out.overlay.map;
  out.regions = delete_curve(m, Curve::kE);

  const std::vector<Vertex>& along_route = out.overlay.crossing_vertices;
  const int n = static_cast<int>(along_route.size());
  std::map<Vertex, int> route_index;
  for (int p = 0; p < n; ++p) route_index[along_route[p]] = p;

  // Walk e' from a, passing straight through every degree-4 vertex. Each
  // overlay e' dart is tagged with the fresh e' edge it belongs to.
  std::vector<int> ep_index(n, 0);
  std::map<Dart, int> stretch_of;  // forward overlay e' dart -> fresh e' edge
  int stretch = 0;
  Dart dart = m.vertex_dart(kEPrimeStart);
  while (true) {
    if (m.label(dart).curve != Curve::kEPrime) inconsistent("walk along e' left the curve");
    stretch_of[dart] = stretch;
    const Vertex v = m.head(dart);
    if (v == kEPrimeEnd) break;
    if (m.degree(v) != 4) inconsistent("e' meets a vertex of degree " + std::to_string(m.degree(v)));
    const Dart back = m.twin(dart);
    const Dart ahead = m.rot(m.rot(back));
    if (auto it = route_index.find(v); it != route_index.end()) {
      ep_index[it->second] = ++stretch;
    }
    dart = ahead;
  }
  if (stretch != n) inconsistent("e' meets " + std::to_string(stretch) + " of " + std::to_string(n) + " route crossings");

  Encoding enc;
  enc.order_e.resize(n);
  enc.signs.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    const Vertex c = along_route[p];
    Dart route_out = -1, ep_out = -1;
    for (Dart x : m.darts_around(c)) {
      const DartLabel& l = m.label(x);
      if (l.curve == Curve::kRoute && l.segment == p + 1) route_out = x;
      if (l.curve == Curve::kEPrime && stretch_of.count(x)) ep_out = x;
    }
    if (route_out < 0 || ep_out < 0) inconsistent("route crossing " + std::to_string(p + 1) + " is malformed");
    enc.order_e[p] = ep_index[p];
    enc.signs[ep_index[p] - 1] = m.rot(route_out) == ep_out ? 1 : -1;
  }
  out.fresh = validate(enc);
  const TwoEdgeDrawing& f = out.fresh;

  auto bind = [&](FaceId region, FaceId fresh_face) {
    auto [it, inserted] = out.region_to_fresh.emplace(region, fresh_face);
    if (!inserted && it->second != fresh_face) inconsistent("a region meets two faces of the rebuilt pair");
  };
  for (const auto& [overlay_dart, edge] : stretch_of) {
    bind(out.regions.region(m.face_of(overlay_dart)), f.map.face_of(f.ep_dart(edge, true)));
    bind(out.regions.region(m.face_of(m.twin(overlay_dart))), f.map.face_of(f.ep_dart(edge, false)));
  }
  for (Dart x = 0; x < m.dart_count(); ++x) {
    const DartLabel& l = m.label(x);
    if (l.curve != Curve::kRoute) continue;
    const Vertex from = l.segment == 0 ? out.overlay.start_vertex : along_route[l.segment - 1];
    const bool forward = m.origin(x) == from;
    bind(out.regions.region(m.face_of(x)), f.map.face_of(f.e_dart(l.segment, forward)));
  }
  std::set<FaceId> image;
  for (const auto& [region, face] : out.region_to_fresh) image.insert(face);
  if (static_cast<int>(out.region_to_fresh.size()) != out.regions.region_count ||
      static_cast<int>(image.size()) != f.map.face_count() || image.size() != out.region_to_fresh.size()) {
    inconsistent("regions and rebuilt faces are not in bijection");
  }
  return out;
}

FaceId carry_point(const TwoEdgeDrawing& d, const RoutePair& pair, FaceId f) {
  // Base darts keep their ids in the overlay; the key dart of f stays on the
  // boundary of the piece of f that contains the point.
  if (!d.map.has_face(f)) throw Error(ErrorCode::kBadPointFace, "no face " + std::to_string(f.key));
  const FaceId overlay_face = pair.overlay.map.face_of(f.key);
  return pair.region_to_fresh.at(pair.regions.region(overlay_face));
}

PropertyReport check_properties(const TwoEdgeDrawing& d, SpiralOptions spiral) {
  if (is_deadlock(d)) throw Error(ErrorCode::kDeadlockDrawing, "properties need a deadlock-free drawing");
  if (is_spiral(d, spiral)) throw Error(ErrorCode::kNotAdmissible, "drawing contains a spiral");
  const HittingReport hit = check_hitting(d);
  if (!hit.ok) throw Error(ErrorCode::kNotAdmissible, "a lens holds no marker");

  PropertyReport report;
  report.crossings = d.crossings();
  report.hitting_number = hit.hitting_number;
  const int k = hit.hitting_number;
  const int n = d.crossings();
  const std::vector<int> lens_list = lenses(d);

  for (int side = 0; side < 2; ++side) {
    const Vertex target = side == 0 ? kEStart : kEEnd;
    std::vector<char> crossed_gap(std::max(n, 1), 0);
    for (int lens : lens_list) {
      const FaceId lf = lens_face(d, lens);
      const auto own = std::find(d.points.begin(), d.points.end(), lf) - d.points.begin();

      RouteCheck rc;
      rc.lens = lens;
      rc.target = target;
      const CurveRoute route = minimal_curve(d, lens, target);
      rc.gaps = route.gaps;
      rc.crossings = static_cast<int>(route.crossed.size());
      for (int g : route.gaps) crossed_gap[g] = 1;

      const RoutePair pair = extract_route_pair(d, route);
      rc.fresh_encoding = encoding_string(pair.fresh.encoding);
      const bool overlay_deadlock = route_deadlocks(d, route);
      if (overlay_deadlock != is_deadlock(pair.fresh)) {
        report.violations.push_back("P1: overlay and rebuilt pair disagree on deadlock for lens " +
                                    std::to_string(lens));
      }
      rc.no_deadlock = !overlay_deadlock && !is_deadlock(pair.fresh);
      if (rc.no_deadlock) {
        rc.no_spiral = !is_spiral(pair.fresh, spiral);

        std::vector<FaceId> carried;
        for (std::size_t i = 0; i < d.points.size(); ++i) {
          if (static_cast<long>(i) == own) continue;
          carried.push_back(carry_point(d, pair, d.points[i]));
        }
        const TwoEdgeDrawing marked = validate(pair.fresh.encoding, carried);
        rc.lenses_hit = check_hitting(marked).ok;
      }
      rc.within_recurrence = k >= 1 && BigInt(rc.crossings) <= c_upper(k - 1);

      const std::string where = " (lens " + std::to_string(lens) + ", u" + std::to_string(side) + ")";
      if (!rc.no_deadlock) report.violations.push_back("P1: e_j and e' form a deadlock" + where);
      else if (!rc.no_spiral) report.violations.push_back("P1: e_j and e' form a spiral" + where);
      if (rc.no_deadlock && !rc.lenses_hit) report.violations.push_back("P2: a lens of (e_j, e') is empty" + where);
      if (!rc.within_recurrence) report.violations.push_back("X_j exceeds C(k-1)" + where);
      report.route_crossing_sum[side] += rc.crossings;
      report.routes.push_back(std::move(rc));
    }
    for (int g = 1; g < n; ++g) {
      if (!crossed_gap[g]) {
        report.gaps_covered[side] = false;
        report.violations.push_back("P3: gap " + std::to_string(g) + " is crossed by no e_j (u" +
                                    std::to_string(side) + ")");
        break;
      }
    }
    report.counting_holds[side] = n <= 1 + report.route_crossing_sum[side];
    if (!report.counting_holds[side]) {
      report.violations.push_back("counting: N exceeds 1 + sum X_j (u" + std::to_string(side) + ")");
    }
  }
  return report;
}

PropertyReport properties_p123(const TwoEdgeDrawing& d, SpiralOptions spiral) {
  PropertyReport report = check_properties(d, spiral);
  if (!report.ok()) throw Error(ErrorCode::kPropertyViolation, report.violations.front());
  return report;
}

}  // namespace ssd
