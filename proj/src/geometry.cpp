#include "ssd/geometry.hpp"

#include "ssd/error.hpp"

namespace ssd {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::kFormatError, "bad rational '" + std::string(whole) + "'");
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw Error(ErrorCode::kFormatError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw Error(ErrorCode::kFormatError, "bad rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(text));
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw Error(ErrorCode::kFormatError, "negative denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) throw Error(ErrorCode::kFormatError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
int orientation(const Point& a, const Point& b, const Point& c) { return sign_of(cross(b - a, c - a)); }

std::optional<Rational> locate_on(const Segment& s, const Point& c) {
  const Point d = s.dir();
  if (cross(d, c - s.p) != 0) return std::nullopt;
  const Rational t = dot(c - s.p, d) / dot(d, d);
  if (t < 0 || t > 1) return std::nullopt;
  return t;
}

Contact intersect(const Segment& a, const Segment& b) {
  Contact c;
  const Point da = a.dir(), db = b.dir();
  const Rational denom = cross(da, db);
  if (denom != 0) {
    const Point w = b.p - a.p;
    const Rational s = cross(w, db) / denom;
    const Rational t = cross(w, da) / denom;
    if (s < 0 || s > 1 || t < 0 || t > 1) return c;
    c.kind = ContactKind::kPoint;
    c.s = s;
    c.t = t;
    c.transversal = true;
    return c;
  }
  if (cross(da, b.p - a.p) != 0) return c;  // parallel, apart
  // Collinear: project b onto a.
  const Rational len = dot(da, da);
  Rational t0 = dot(b.p - a.p, da) / len, t1 = dot(b.q - a.p, da) / len;
  if (t0 > t1) std::swap(t0, t1);
  const Rational lo = t0 > 0 ? t0 : Rational(0);
  const Rational hi = t1 < 1 ? t1 : Rational(1);
  if (lo > hi) return c;
  if (lo < hi) {
    c.kind = ContactKind::kOverlap;
    return c;
  }
  c.kind = ContactKind::kPoint;
  c.s = lo;
  c.t = *locate_on(b, a.at(lo));
  return c;
}

}  // namespace ssd
