#pragma once

// Exact planar geometry over rationals.

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ssd/bounds.hpp"

namespace ssd {

using Rational = BigRational;

struct Point {
  Rational x, y;
  bool operator==(const Point&) const = default;
  bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// "p/q" or "p". Throws FormatError.
Rational parse_rational(std::string_view text);
// Always "p/q" with q > 0 and gcd(p, q) = 1.
std::string format_rational(const Rational& r);

Point operator-(const Point& a, const Point& b);
Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
// Sign of cross(b - a, c - a).
int orientation(const Point& a, const Point& b, const Point& c);

struct Segment {
  Point p, q;
  Point at(const Rational& t) const { return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}; }
  Point dir() const { return q - p; }
};

// Parameter of c on s when c lies on the closed segment.
std::optional<Rational> locate_on(const Segment& s, const Point& c);

enum class ContactKind { kNone, kPoint, kOverlap };

struct Contact {
  ContactKind kind = ContactKind::kNone;
  Rational s, t;  // parameters of the point on a and b (kPoint)
  bool transversal = false;  // not collinear
};

Contact intersect(const Segment& a, const Segment& b);

}  // namespace ssd
