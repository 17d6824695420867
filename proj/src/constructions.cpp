#include "ssd/constructions.hpp"

#include <charconv>
#include <string>

#include "ssd/error.hpp"

namespace ssd {

namespace {

constexpr int kMaxDoublings = 20;

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kFormatError, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kTwist: return "twist";
    case ConstructionKind::kSpiral: return "spiral";
    case ConstructionKind::kDoubling: return "doubling";
    case ConstructionKind::kEnhanced: return "enhanced";
  }
  return "?";
}

ConstructionKind parse_construction_kind(std::string_view name) {
  for (auto kind : {ConstructionKind::kTwist, ConstructionKind::kSpiral, ConstructionKind::kDoubling,
                    ConstructionKind::kEnhanced}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kFormatError, "unknown construction '" + std::string(name) + "'");
}

ConstructionRecipe recipe(ConstructionKind kind, int size) {
  ConstructionRecipe r{kind, size, 0, 0};
  switch (kind) {
    case ConstructionKind::kTwist:
      if (size < 1) throw Error(ErrorCode::kMalformedEncoding, "twist needs m >= 1");
      r.expected_crossings = size;
      r.expected_lenses = size - 1;
      break;
    case ConstructionKind::kSpiral:
      r.expected_crossings = 6;
      r.expected_lenses = 2;
      break;
    case ConstructionKind::kDoubling:
      if (size < 0 || size > kMaxDoublings) throw Error(ErrorCode::kMalformedEncoding, "doubling size out of range");
      r.expected_crossings = 1LL << size;
      r.expected_lenses = size;
      break;
    case ConstructionKind::kEnhanced:
      if (size < 2) throw Error(ErrorCode::kEnhancedUndefined, "enhanced doubling needs k >= 2");
      if (size > kMaxDoublings) throw Error(ErrorCode::kMalformedEncoding, "enhanced size out of range");
      r.expected_crossings = (1LL << size) + (1LL << (size - 2));
      r.expected_lenses = size;
      break;
  }
  return r;
}

Encoding twist_encoding(int m) {
  if (m < 1) throw Error(ErrorCode::kMalformedEncoding, "twist needs m >= 1");
  Encoding enc;
  for (int i = 1; i <= m; ++i) {
    enc.order_e.push_back(i);
    enc.signs.push_back(i % 2 == 1 ? 1 : -1);
  }
  return enc;
}

TwoEdgeDrawing twist(int m) { return validate(twist_encoding(m)); }

Encoding spiral_encoding() { return Encoding{{5, 2, 3, 4, 1, 6}, {1, -1, 1, -1, 1, -1}}; }

TwoEdgeDrawing spiral_example() { return validate(spiral_encoding(), AutoLens{}); }

Encoding doubling_step(const Encoding& encoding) {
  const int n = encoding.crossings();
  Encoding out;
  out.order_e.reserve(2 * n);
  out.signs.assign(2 * n, 0);
  auto copy_of = [&](int xi, bool first) {
    const bool left = encoding.signs[xi - 1] < 0;
    return left == first ? 2 * xi - 1 : 2 * xi;
  };
  for (int p = 0; p < n; ++p) {
    const int xi = encoding.order_e[p];
    const int c = copy_of(xi, true);
    out.order_e.push_back(c);
    out.signs[c - 1] = encoding.signs[xi - 1];
  }
  for (int p = n - 1; p >= 0; --p) {
    const int xi = encoding.order_e[p];
    const int c = copy_of(xi, false);
    out.order_e.push_back(c);
    out.signs[c - 1] = -encoding.signs[xi - 1];
  }
  return out;
}

Encoding doubling_encoding(int k) {
  recipe(ConstructionKind::kDoubling, k);
  Encoding enc{{1}, {-1}};
  for (int i = 0; i < k; ++i) enc = doubling_step(enc);
  return enc;
}

TwoEdgeDrawing doubling(int k) { return validate(doubling_encoding(k), AutoLens{}); }

Encoding enhanced_encoding(int k) {
  recipe(ConstructionKind::kEnhanced, k);
  Encoding enc = parse_encoding_string(kEnhancedSeed);
  for (int i = 2; i < k; ++i) enc = doubling_step(enc);
  return enc;
}

TwoEdgeDrawing enhanced_doubling(int k) { return validate(enhanced_encoding(k), AutoLens{}); }

TwoEdgeDrawing construct(const ConstructionRecipe& r) {
  switch (r.kind) {
    case ConstructionKind::kTwist: return twist(r.size);
    case ConstructionKind::kSpiral: return spiral_example();
    case ConstructionKind::kDoubling: return doubling(r.size);
    case ConstructionKind::kEnhanced: return enhanced_doubling(r.size);
  }
  throw Error(ErrorCode::kFormatError, "unknown construction");
}

Encoding parse_encoding_string(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw Error(ErrorCode::kFormatError, "encoding must look like N:order:signs");
  }
  const int n = parse_int(text.substr(0, c1));
  Encoding enc;
  std::string_view order = text.substr(c1 + 1, c2 - c1 - 1);
  while (!order.empty()) {
    const auto comma = order.find(',');
    enc.order_e.push_back(parse_int(order.substr(0, comma)));
    order = comma == std::string_view::npos ? std::string_view{} : order.substr(comma + 1);
  }
  for (char ch : text.substr(c2 + 1)) {
    if (ch == '+') enc.signs.push_back(1);
    else if (ch == '-') enc.signs.push_back(-1);
    else throw Error(ErrorCode::kFormatError, std::string("bad sign character '") + ch + "'");
  }
  if (enc.crossings() != n || static_cast<int>(enc.signs.size()) != n) {
    throw Error(ErrorCode::kFormatError, "encoding length does not match N");
  }
  return enc;
}

}  // namespace ssd
