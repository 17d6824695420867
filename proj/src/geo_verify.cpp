#include "ssd/geo_verify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "ssd/error.hpp"

namespace ssd {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void degenerate(const std::string& what) { throw Error(ErrorCode::kDegenerateIncidence, what); }

std::string edge_name(const GeometricDrawing& gd, int i) {
  return "edge " + std::to_string(i) + " (" + std::to_string(gd.edges[i].u) + "-" + std::to_string(gd.edges[i].v) + ")";
}

std::string point_name(const Point& p) { return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")"; }

Segment segment(const GeoEdge& e, int i) { return {e.polyline[i], e.polyline[i + 1]}; }
int segments(const GeoEdge& e) { return static_cast<int>(e.polyline.size()) - 1; }

bool shares_vertex(const GeoEdge& a, const GeoEdge& b) { return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v; }

// Position along a polyline.
struct Param {
  int seg = 0;
  Rational t;
  bool operator<(const Param& o) const { return seg != o.seg ? seg < o.seg : t < o.t; }
};

bool at_end(const GeoEdge& e, const Param& p) {
  return (p.seg == 0 && p.t == 0) || (p.seg == segments(e) - 1 && p.t == 1);
}

Point point_of(const std::vector<ordered_json>& xy, const std::string& where) {
  if (xy.size() != 2 || !xy[0].is_string() || !xy[1].is_string()) {
    throw Error(ErrorCode::kFormatError, where + ": a point is a pair of rational strings");
  }
  return {parse_rational(xy[0].get<std::string>()), parse_rational(xy[1].get<std::string>())};
}

std::string point_json(const Point& p) {
  return "[\"" + format_rational(p.x) + "\", \"" + format_rational(p.y) + "\"]";
}

// All crossings between edges a and b; throws on any degenerate contact.
std::vector<GeoCrossing> contacts(const GeometricDrawing& gd, int ia, int ib) {
  const GeoEdge& a = gd.edges[ia];
  const GeoEdge& b = gd.edges[ib];
  std::vector<GeoCrossing> out;
  for (int i = 0; i < segments(a); ++i) {
    for (int j = 0; j < segments(b); ++j) {
      const Segment sa = segment(a, i), sb = segment(b, j);
      const Contact c = intersect(sa, sb);
      if (c.kind == ContactKind::kNone) continue;
      if (c.kind == ContactKind::kOverlap) {
        degenerate(edge_name(gd, ia) + " and " + edge_name(gd, ib) + " overlap");
      }
      const Param pa{i, c.s}, pb{j, c.t};
      const Point x = sa.at(c.s);
      if (at_end(a, pa) && at_end(b, pb)) {
        // Meeting at a common end vertex is the only allowed contact at an end.
        const int va = (pa.seg == 0 && pa.t == 0) ? a.u : a.v;
        const int vb = (pb.seg == 0 && pb.t == 0) ? b.u : b.v;
        if (va == vb) continue;
      }
      if (!c.transversal) {
        degenerate(edge_name(gd, ia) + " and " + edge_name(gd, ib) + " touch at " + point_name(x));
      }
      if (c.s == 0 || c.s == 1 || c.t == 0 || c.t == 1) {
        degenerate(edge_name(gd, ia) + " and " + edge_name(gd, ib) + " meet at a bend or end point " +
                   point_name(x));
      }
      GeoCrossing g;
      g.at = x;
      g.seg_a = i;
      g.seg_b = j;
      g.t_a = c.s;
      g.t_b = c.t;
      g.sign = cross(sa.dir(), sb.dir()) > 0 ? 1 : -1;
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const GeoCrossing& x, const GeoCrossing& y) {
    return Param{x.seg_a, x.t_a} < Param{y.seg_a, y.t_a};
  });
  return out;
}

// Face location for points off the two curves of a pair.
class PairLocator {
 public:
  PairLocator(const GeometricDrawing& gd, int ia, int ib, const std::vector<GeoCrossing>& xs)
      : curves_{&gd.edges[ia], &gd.edges[ib]} {
    for (const GeoCrossing& x : xs) {
      cuts_[0].push_back({x.seg_a, x.t_a});
      cuts_[1].push_back({x.seg_b, x.t_b});
      special_.push_back(x.at);
    }
    for (int c = 0; c < 2; ++c) {
      std::sort(cuts_[c].begin(), cuts_[c].end());
      for (const Point& p : curves_[c]->polyline) special_.push_back(p);
    }
  }

  // Returns (curve, combinatorial edge, point is on the left of the curve).
  struct Hit {
    int curve = 0;
    int edge = 0;
    bool left = false;
  };

  Hit locate(const Point& p) const {
    for (int c = 0; c < 2; ++c) {
      const GeoEdge& e = *curves_[c];
      for (int s = 0; s < segments(e); ++s) {
        std::vector<Rational> ts{0};
        for (const Param& q : cuts_[c]) {
          if (q.seg == s) ts.push_back(q.t);
        }
        ts.push_back(1);
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
          const Point target = segment(e, s).at((ts[i] + ts[i + 1]) / 2);
          if (auto hit = shoot(p, target)) return *hit;
        }
      }
    }
    degenerate("cannot locate point " + point_name(p));
  }

 private:
  std::optional<Hit> shoot(const Point& p, const Point& target) const {
    const Segment ray{p, target};
    for (const Point& x : special_) {
      if (locate_on(ray, x)) return std::nullopt;
    }
    std::optional<Rational> best;
    Hit hit;
    for (int c = 0; c < 2; ++c) {
      const GeoEdge& e = *curves_[c];
      for (int s = 0; s < segments(e); ++s) {
        const Segment seg = segment(e, s);
        const Contact k = intersect(ray, seg);
        if (k.kind == ContactKind::kNone) continue;
        if (k.kind == ContactKind::kOverlap || !k.transversal) return std::nullopt;
        if (best && *best <= k.s) continue;
        best = k.s;
        const Param at{s, k.t};
        hit.curve = c;
        hit.edge = static_cast<int>(std::lower_bound(cuts_[c].begin(), cuts_[c].end(), at) - cuts_[c].begin());
        hit.left = cross(seg.dir(), p - ray.at(k.s)) > 0;
      }
    }
    if (!best) return std::nullopt;
    return hit;
  }

  const GeoEdge* curves_[2];
  std::vector<Param> cuts_[2];
  std::vector<Point> special_;
};

FaceId face_of_hit(const TwoEdgeDrawing& d, const PairLocator::Hit& h) {
  // Curve 0 is e, curve 1 is e'.
  const Dart dart = h.curve == 1 ? d.ep_dart(h.edge, h.left) : d.e_dart(h.edge, h.left);
  return d.map.face_of(dart);
}

}  // namespace

bool GeometricDrawing::complete() const {
  std::set<std::pair<int, int>> seen;
  for (const GeoEdge& e : edges) seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return static_cast<long>(seen.size()) == static_cast<long>(n()) * (n() - 1) / 2 && seen.size() == edges.size();
}

void check_general_position(const GeometricDrawing& gd) {
  for (int i = 0; i < gd.n(); ++i) {
    for (int j = i + 1; j < gd.n(); ++j) {
      if (gd.vertices[i] == gd.vertices[j]) {
        degenerate("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  for (int ie = 0; ie < static_cast<int>(gd.edges.size()); ++ie) {
    const GeoEdge& e = gd.edges[ie];
    for (int s = 0; s < segments(e); ++s) {
      if (e.polyline[s] == e.polyline[s + 1]) degenerate(edge_name(gd, ie) + " has a zero-length segment");
    }
    for (int s = 0; s < segments(e); ++s) {
      for (int t = s + 1; t < segments(e); ++t) {
        const Contact c = intersect(segment(e, s), segment(e, t));
        if (c.kind == ContactKind::kNone) continue;
        if (t == s + 1 && c.kind == ContactKind::kPoint && c.s == 1 && c.t == 0) continue;
        degenerate(edge_name(gd, ie) + " is not simple");
      }
    }
    for (int w = 0; w < gd.n(); ++w) {
      for (int s = 0; s < segments(e); ++s) {
        const auto t = locate_on(segment(e, s), gd.vertices[w]);
        if (!t) continue;
        const bool start = w == e.u && s == 0 && *t == 0;
        const bool end = w == e.v && s == segments(e) - 1 && *t == 1;
        if (!start && !end) degenerate("vertex " + std::to_string(w) + " lies on " + edge_name(gd, ie));
      }
    }
  }
  std::map<Point, std::set<int>> through;
  for (int a = 0; a < static_cast<int>(gd.edges.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(gd.edges.size()); ++b) {
      for (const GeoCrossing& x : contacts(gd, a, b)) {
        auto& s = through[x.at];
        s.insert(a);
        s.insert(b);
        if (s.size() >= 3) degenerate("three edges pass through " + point_name(x.at));
      }
    }
  }
}

GeometricDrawing parse_gdr(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::kFormatError, std::string("not JSON: ") + e.what());
  }
  GeometricDrawing gd;
  try {
    if (!j.is_object() || !j.at("vertices").is_array() || !j.at("edges").is_array()) {
      throw Error(ErrorCode::kFormatError, "expected an object with vertices and edges lists");
    }
    for (const auto& v : j.at("vertices")) {
      gd.vertices.push_back(point_of(v.get<std::vector<ordered_json>>(), "vertex"));
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& e : j.at("edges")) {
      GeoEdge edge;
      edge.u = e.at("u").get<int>();
      edge.v = e.at("v").get<int>();
      const std::string where = "edge " + std::to_string(gd.edges.size());
      if (edge.u < 0 || edge.v < 0 || edge.u >= gd.n() || edge.v >= gd.n() || edge.u == edge.v) {
        throw Error(ErrorCode::kFormatError, where + ": bad end vertices");
      }
      if (!seen.insert({std::min(edge.u, edge.v), std::max(edge.u, edge.v)}).second) {
        throw Error(ErrorCode::kFormatError, where + ": duplicate edge");
      }
      if (e.contains("polyline")) {
        for (const auto& p : e.at("polyline")) edge.polyline.push_back(point_of(p.get<std::vector<ordered_json>>(), where));
        if (edge.polyline.size() < 2 || edge.polyline.front() != gd.vertices[edge.u] ||
            edge.polyline.back() != gd.vertices[edge.v]) {
          throw Error(ErrorCode::kFormatError, where + ": polyline must run from u to v");
        }
      } else {
        edge.straight = true;
        edge.polyline = {gd.vertices[edge.u], gd.vertices[edge.v]};
      }
      gd.edges.push_back(std::move(edge));
    }
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  }
  check_general_position(gd);
  return gd;
}

std::string serialize_gdr(const GeometricDrawing& gd) {
  std::ostringstream out;
  out << "{\n  \"vertices\": [";
  for (int i = 0; i < gd.n(); ++i) out << (i ? ",\n    " : "\n    ") << point_json(gd.vertices[i]);
  out << "\n  ],\n  \"edges\": [";
  for (std::size_t i = 0; i < gd.edges.size(); ++i) {
    const GeoEdge& e = gd.edges[i];
    out << (i ? ",\n    " : "\n    ") << "{\"u\": " << e.u << ", \"v\": " << e.v;
    if (!e.straight) {
      out << ", \"polyline\": [";
      for (std::size_t k = 0; k < e.polyline.size(); ++k) out << (k ? ", " : "") << point_json(e.polyline[k]);
      out << "]";
    }
    out << "}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

GeometricDrawing read_gdr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFormatError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_gdr(buf.str());
}

std::vector<GeoCrossing> crossings_between(const GeometricDrawing& gd, int a, int b) { return contacts(gd, a, b); }

TwoEdgeDrawing induced_pair(const GeometricDrawing& gd, int ia, int ib) {
  const GeoEdge& a = gd.edges[ia];
  const GeoEdge& b = gd.edges[ib];
  if (shares_vertex(a, b)) throw Error(ErrorCode::kMalformedEncoding, "induced pairs need independent edges");
  const std::vector<GeoCrossing> xs = contacts(gd, ia, ib);
  const int n = static_cast<int>(xs.size());

  // xs is sorted along a; number the crossings along b.
  std::vector<int> by_b(n);
  for (int i = 0; i < n; ++i) by_b[i] = i;
  std::sort(by_b.begin(), by_b.end(), [&](int x, int y) {
    return Param{xs[x].seg_b, xs[x].t_b} < Param{xs[y].seg_b, xs[y].t_b};
  });
  Encoding enc;
  enc.order_e.assign(n, 0);
  enc.signs.assign(n, 0);
  for (int xi = 1; xi <= n; ++xi) {
    const int i = by_b[xi - 1];
    enc.order_e[i] = xi;
    enc.signs[xi - 1] = xs[i].sign;
  }
  const TwoEdgeDrawing bare = validate(enc);
  if (n == 0) {
    std::vector<FaceId> points(gd.n(), bare.map.faces()[0].id);
    return validate(enc, points);
  }

  const PairLocator locator(gd, ia, ib, xs);
  std::vector<FaceId> points;
  for (int w = 0; w < gd.n(); ++w) {
    if (w == a.u) points.push_back(bare.map.endpoint_face(kEStart));
    else if (w == a.v) points.push_back(bare.map.endpoint_face(kEEnd));
    else if (w == b.u) points.push_back(bare.map.endpoint_face(kEPrimeStart));
    else if (w == b.v) points.push_back(bare.map.endpoint_face(kEPrimeEnd));
    else points.push_back(face_of_hit(bare, locator.locate(gd.vertices[w])));
  }
  if (!is_deadlock(bare)) return validate(enc, points);

  Rational lo_x = a.polyline[0].x, lo_y = a.polyline[0].y;
  for (const GeoEdge* e : {&a, &b}) {
    for (const Point& p : e->polyline) {
      lo_x = std::min(lo_x, p.x);
      lo_y = std::min(lo_y, p.y);
    }
  }
  const FaceId unbounded = face_of_hit(bare, locator.locate(Point{lo_x - 1, lo_y - 1}));
  return validate(enc, points, unbounded);
}

VerificationReport verify(const GeometricDrawing& gd, const VerifyOptions& options) {
  check_general_position(gd);
  VerificationReport r;
  r.n = gd.n();
  r.complete = gd.complete();
  const int m = static_cast<int>(gd.edges.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      PairReport p;
      p.a = a;
      p.b = b;
      p.adjacent = shares_vertex(gd.edges[a], gd.edges[b]);
      r.pairs.push_back(p);
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < r.pairs.size(); i = next++) {
      PairReport& p = r.pairs[i];
      if (p.adjacent) {
        p.crossings = static_cast<int>(contacts(gd, p.a, p.b).size());
        continue;
      }
      const TwoEdgeDrawing d = induced_pair(gd, p.a, p.b);
      p.crossings = d.crossings();
      p.encoding = encoding_string(d.encoding);
      p.deadlock = is_deadlock(d);
      const HittingReport hit = check_hitting(d);
      p.lenses = hit.hitting_number;
      p.empty_lenses = hit.empty_lenses;
      if (options.all_lenses) {
        std::set<FaceId> minimal;
        for (int lens : lenses(d)) minimal.insert(lens_face(d, lens));
        for (const Face& f : d.map.faces()) {
          if (minimal.count(f.id)) continue;
          if (std::find(d.points.begin(), d.points.end(), f.id) != d.points.end()) continue;
          int e_sides = 0, ep_sides = 0;
          for (Dart x : f.darts) {
            if (d.map.degree(d.map.origin(x)) == 1 || d.map.degree(d.map.head(x)) == 1) {
              e_sides = ep_sides = 99;  // touches a tail: not a two-sided face
              break;
            }
            (d.map.label(x).curve == Curve::kE ? e_sides : ep_sides) += 1;
          }
          if (e_sides == 1 && ep_sides == 1) p.empty_two_gons.push_back(f.id);
        }
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  bool empty_lens = false;
  for (const PairReport& p : r.pairs) {
    r.total_crossings += p.crossings;
    const std::string names = edge_name(gd, p.a) + " and " + edge_name(gd, p.b);
    if (p.adjacent && p.crossings > 0) {
      r.star_simple = false;
      r.violations.push_back({"adjacent-crossing", "adjacent " + names + " cross " + std::to_string(p.crossings) + " times"});
    }
    if (!p.empty_lenses.empty()) {
      empty_lens = true;
      std::string bags;
      for (int lens : p.empty_lenses) bags += (bags.empty() ? "" : ",") + std::to_string(lens);
      r.violations.push_back({"empty-lens", names + " form an empty lens at bag " + bags});
    }
  }
  if (r.n >= 4) {
    const BoundTable t = bounds_for_n(r.n);
    r.pair_bound = t.pair_bound;
    r.total_bound = t.total_bound;
    for (const PairReport& p : r.pairs) {
      if (!p.adjacent && BigInt(p.crossings) > t.pair_bound) {
        r.violations.push_back({"pair-bound", edge_name(gd, p.a) + " and " + edge_name(gd, p.b) + " cross " +
                                                  std::to_string(p.crossings) + " > " + t.pair_bound.str() + " times"});
      }
    }
    if (BigInt(r.total_crossings) > t.total_bound) {
      r.violations.push_back({"total-bound", std::to_string(r.total_crossings) + " crossings exceed " + t.total_bound.str()});
    }
  }
  // In a complete star-simple drawing without empty lenses no pair may
  // deadlock or spiral; anything else is reported as an inconsistency.
  if (r.complete && r.star_simple && !empty_lens) {
    for (PairReport& p : r.pairs) {
      if (p.adjacent) continue;
      const std::string names = edge_name(gd, p.a) + " and " + edge_name(gd, p.b);
      if (p.deadlock) {
        r.violations.push_back({"inconsistency", names + " form a deadlock in a drawing without empty lenses"});
        continue;
      }
      p.spiral = is_spiral(induced_pair(gd, p.a, p.b));
      if (*p.spiral) r.violations.push_back({"inconsistency", names + " form a spiral in a drawing without empty lenses"});
    }
  }
  return r;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json pairs = ordered_json::array();
  for (const PairReport& p : r.pairs) {
    ordered_json j{{"edges", {p.a, p.b}}, {"adjacent", p.adjacent}, {"crossings", p.crossings}};
    if (!p.adjacent) {
      j["encoding"] = p.encoding;
      j["lenses"] = p.lenses;
      j["empty_lenses"] = p.empty_lenses;
      j["deadlock"] = p.deadlock;
      j["spiral"] = p.spiral ? ordered_json(*p.spiral) : ordered_json(nullptr);
      if (!p.empty_two_gons.empty()) {
        std::vector<int> keys;
        for (FaceId f : p.empty_two_gons) keys.push_back(f.key);
        j["empty_two_gons"] = keys;
      }
    }
    pairs.push_back(std::move(j));
  }
  ordered_json violations = ordered_json::array();
  for (const Finding& f : r.violations) violations.push_back({{"kind", f.kind}, {"detail", f.detail}});
  return ordered_json{{"n", r.n},
                      {"complete", r.complete},
                      {"star_simple", r.star_simple},
                      {"total_crossings", r.total_crossings},
                      {"pair_bound", r.pair_bound ? ordered_json(r.pair_bound->str()) : ordered_json(nullptr)},
                      {"total_bound", r.total_bound ? ordered_json(r.total_bound->str()) : ordered_json(nullptr)},
                      {"pairs", pairs},
                      {"violations", violations},
                      {"verdict", r.pass() ? "pass" : "violation"}};
}

}  // namespace ssd
