#pragma once

// Generators for the extremal and pathological two-edge configurations.

#include <string_view>

#include "ssd/two_edge.hpp"

namespace ssd {

enum class ConstructionKind { kTwist, kSpiral, kDoubling, kEnhanced };

struct ConstructionRecipe {
  ConstructionKind kind = ConstructionKind::kDoubling;
  int size = 0;
  long long expected_crossings = 0;
  int expected_lenses = 0;
};

std::string_view to_string(ConstructionKind kind);
// Throws FormatError for unknown names.
ConstructionKind parse_construction_kind(std::string_view name);

// Throws EnhancedUndefined (enhanced, size < 2) or MalformedEncoding (size out of range).
ConstructionRecipe recipe(ConstructionKind kind, int size);

// m crossings along the identity order with alternating signs; no markers.
Encoding twist_encoding(int m);
TwoEdgeDrawing twist(int m);

// e winds around the endpoint side of a lens; one marker in every lens.
Encoding spiral_encoding();
TwoEdgeDrawing spiral_example();

// Every crossing is replaced by two adjacent copies along e'. e first runs
// through one copy of each crossing in the old order, turns around past the
// old end and returns through the other copies with flipped signs, closing
// one new lens next to the old start.
Encoding doubling_step(const Encoding& encoding);

Encoding doubling_encoding(int k);
TwoEdgeDrawing doubling(int k);  // one marker per lens

// The 5-crossing configuration with two lenses, as text.
inline constexpr std::string_view kEnhancedSeed = "5:1,4,3,2,5:+-+-+";
Encoding enhanced_encoding(int k);
TwoEdgeDrawing enhanced_doubling(int k);

TwoEdgeDrawing construct(const ConstructionRecipe& r);

// Inverse of encoding_string. Throws FormatError.
Encoding parse_encoding_string(std::string_view text);

}  // namespace ssd
