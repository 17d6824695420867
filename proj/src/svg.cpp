#include "ssd/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "ssd/error.hpp"

namespace ssd {

namespace {

// Side of e' that e occupies after crossing xi: +1 above, -1 below.
int side_after(const TwoEdgeDrawing& d, int xi) { return d.encoding.signs[xi - 1] > 0 ? -1 : 1; }

struct Arc {
  int from, to;  // x positions (crossing indices along e')
  int side;
};

std::vector<Arc> arcs_of(const TwoEdgeDrawing& d) {
  std::vector<Arc> arcs;
  const std::vector<int>& order = d.encoding.order_e;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) arcs.push_back({order[p], order[p + 1], side_after(d, order[p])});
  return arcs;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

bool wrap_free(const TwoEdgeDrawing& d) {
  const std::vector<int>& order = d.encoding.order_e;
  for (std::size_t p = 0; p + 1 < order.size(); ++p) {
    if (d.encoding.signs[order[p] - 1] == d.encoding.signs[order[p + 1] - 1]) return false;
  }
  const std::vector<Arc> arcs = arcs_of(d);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i].side != arcs[j].side) continue;
      int l1 = std::min(arcs[i].from, arcs[i].to), r1 = std::max(arcs[i].from, arcs[i].to);
      int l2 = std::min(arcs[j].from, arcs[j].to), r2 = std::max(arcs[j].from, arcs[j].to);
      if (l2 < l1) {
        std::swap(l1, l2);
        std::swap(r1, r2);
      }
      if (l1 < l2 && l2 < r1 && r1 < r2) return false;
    }
  }
  return !d.outer || *d.outer == d.map.endpoint_face(kEPrimeStart);
}

std::string render_svg(const TwoEdgeDrawing& d, const RenderStyle& style) {
  if (!wrap_free(d)) throw Error(ErrorCode::kWrapNotRenderable, "e passes around an end of e'");
  const int n = d.crossings();
  const std::vector<Arc> arcs = arcs_of(d);
  const double u = style.unit;

  double up = 0.5, down = 0.5;  // extent above and below e', in units
  for (const Arc& a : arcs) {
    double& extent = a.side > 0 ? up : down;
    extent = std::max(extent, std::abs(a.to - a.from) / 2.0);
  }
  if (n == 0) down = 1;
  const double width = (n + 1) * u + 2 * style.margin;
  const double height = (up + down) * u + 2 * style.margin;
  auto X = [&](double x) { return num(style.margin + x * u); };
  auto Y = [&](double y) { return num(style.margin + (up - y) * u); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
    << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  s << "  <line id=\"e-prime\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(n + 1) << "\" y2=\"" << Y(0)
    << "\" stroke=\"" << style.e_prime_color << "\" stroke-width=\"" << num(style.stroke_width) << "\"/>\n";

  std::vector<std::pair<double, double>> ends;  // u0, u1
  s << "  <path id=\"e\" fill=\"none\" stroke=\"" << style.e_color << "\" stroke-width=\""
    << num(style.stroke_width) << "\" d=\"";
  if (n == 0) {
    ends = {{0, -1}, {1, -1}};
    s << "M " << X(0) << " " << Y(-1) << " L " << X(1) << " " << Y(-1);
  } else {
    const std::vector<int>& order = d.encoding.order_e;
    const int first = order.front(), last = order.back();
    ends = {{first, -0.5 * side_after(d, first)}, {last, 0.5 * side_after(d, last)}};
    s << "M " << X(first) << " " << Y(ends[0].second) << " L " << X(first) << " " << Y(0);
    for (const Arc& a : arcs) {
      // Screen y grows downwards: left to right over the top is clockwise.
      const bool sweep = (a.to > a.from) == (a.side > 0);
      s << " A " << num(std::abs(a.to - a.from) * u / 2) << " " << num(std::abs(a.to - a.from) * u / 2) << " 0 0 "
        << (sweep ? 1 : 0) << " " << X(a.to) << " " << Y(0);
    }
    s << " L " << X(last) << " " << Y(ends[1].second);
  }
  s << "\"/>\n";

  const std::pair<double, double> ep_ends[2] = {{0, 0}, {n + 1, 0}};
  const char* names[4] = {"a", "b", "u0", "u1"};
  for (int i = 0; i < 4; ++i) {
    const auto [x, y] = i < 2 ? ep_ends[i] : ends[i - 2];
    s << "  <circle id=\"" << names[i] << "\" cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\""
      << num(style.endpoint_radius) << "\" fill=\"" << (i < 2 ? style.e_prime_color : style.e_color) << "\"/>\n";
  }

  // Markers sit just off e', on the side of the smallest e' dart of their face.
  std::map<FaceId, std::vector<int>> by_face;
  for (int i = 0; i < static_cast<int>(d.points.size()); ++i) by_face[d.points[i]].push_back(i);
  std::vector<std::pair<double, double>> spots(d.points.size());
  for (const auto& [face, members] : by_face) {
    Dart best = -1;
    for (Dart x : d.map.face(face).darts) {
      if (d.map.label(x).curve == Curve::kEPrime && (best < 0 || x < best)) best = x;
    }
    const int edge = best / 2;
    const bool above = best % 2 == 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const double x = edge + 0.2 + 0.6 * (k + 1) / (members.size() + 1);
      spots[members[k]] = {x, above ? 0.25 : -0.25};
    }
  }
  for (std::size_t i = 0; i < spots.size(); ++i) {
    s << "  <circle class=\"marker\" cx=\"" << X(spots[i].first) << "\" cy=\"" << Y(spots[i].second) << "\" r=\""
      << num(style.marker_radius) << "\" fill=\"" << style.marker_color << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace ssd
