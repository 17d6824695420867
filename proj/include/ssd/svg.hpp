#pragma once

// SVG pictures of wrap-free two-edge drawings: e' as a horizontal red
// segment, e as a black chain of semicircles meeting e' at x = 1..N.

#include <string>

#include "ssd/two_edge.hpp"

namespace ssd {

struct RenderStyle {
  int unit = 40;    // distance between consecutive crossings, in px
  int margin = 20;  // px around the picture
  std::string e_color = "black";
  std::string e_prime_color = "red";
  std::string marker_color = "black";
  double stroke_width = 2;
  double marker_radius = 4;
  double endpoint_radius = 3;
};

// True when e can be drawn as semicircles on alternating sides of e' with
// arcs on each side nested and the endpoints of e' on the outer face.
bool wrap_free(const TwoEdgeDrawing& d);

// Throws WrapNotRenderable.
std::string render_svg(const TwoEdgeDrawing& d, const RenderStyle& style = {});

}  // namespace ssd
