#pragma once

// .ted files: JSON description of a two-edge drawing.
//
//   {"n": 4, "order_e": [1, 4, 3, 2], "signs": [-1, 1, -1, 1],
//    "points": "auto-lens" | [face keys], "outer": face key (optional)}
//
// Face keys are the smallest dart on the face in the map built from the
// encoding (see TwoCurveMap::build for the dart numbering).

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ssd/two_edge.hpp"

namespace ssd {

struct TedFile {
  Encoding encoding;
  bool auto_lens = false;
  std::vector<FaceId> points;  // ignored when auto_lens
  std::optional<FaceId> outer;

  bool operator==(const TedFile&) const = default;
};

// Throws FormatError.
TedFile parse_ted(std::string_view text);
std::string serialize_ted(const TedFile& file);

TedFile read_ted(const std::string& path);
void write_ted(const std::string& path, const TedFile& file);

// Validates the described drawing (all validate errors propagate).
TwoEdgeDrawing to_drawing(const TedFile& file);
TedFile to_ted(const TwoEdgeDrawing& d);

}  // namespace ssd
