#include <string>

#include "doctest.h"
#include "ssd/constructions.hpp"
#include "ssd/error.hpp"
#include "ssd/ted.hpp"

using namespace ssd;

namespace {

std::string fixture(const std::string& name) { return std::string(SSD_FIXTURE_DIR) + "/" + name; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::kFormatError;
}

}  // namespace

TEST_CASE("ted fixtures load") {
  CHECK(to_drawing(read_ted(fixture("doubling2.ted"))).encoding == doubling_encoding(2));
  CHECK(is_spiral(to_drawing(read_ted(fixture("spiral.ted")))));
  CHECK(is_deadlock(to_drawing(read_ted(fixture("deadlock_left.ted")))));
  CHECK(is_deadlock(to_drawing(read_ted(fixture("deadlock_right.ted")))));
  CHECK(lenses(to_drawing(read_ted(fixture("enhanced_seed.ted")))).size() == 2);
  CHECK_FALSE(check_hitting(to_drawing(read_ted(fixture("twist3.ted")))).ok);
}

TEST_CASE("ted round trip") {
  for (const TwoEdgeDrawing& d : {doubling(3), enhanced_doubling(3), twist(4)}) {
    const TedFile f = to_ted(d);
    CHECK(parse_ted(serialize_ted(f)) == f);
    CHECK(to_drawing(f).points == d.points);
  }
  TedFile with_outer;
  with_outer.encoding = Encoding{{1, 2}, {-1, -1}};
  with_outer.outer = FaceId{0};
  CHECK(parse_ted(serialize_ted(with_outer)) == with_outer);
}

TEST_CASE("ted format errors") {
  CHECK(code_of([] { parse_ted(R"({"n": 2, "order_e": [1], "signs": [1, 1]})"); }) == ErrorCode::kFormatError);
  CHECK(code_of([] { parse_ted(R"({"n": 1, "order_e": [1], "signs": [2]})"); }) == ErrorCode::kFormatError);
  CHECK(code_of([] { parse_ted(R"({"n": 1, "order_e": [1], "signs": [1], "colour": 3})"); }) ==
        ErrorCode::kFormatError);
  CHECK(code_of([] { parse_ted(R"({"n": 1, "order_e": [1], "signs": [1], "points": "all"})"); }) ==
        ErrorCode::kFormatError);
  CHECK(code_of([] { parse_ted("{"); }) == ErrorCode::kFormatError);
  CHECK(code_of([] { to_drawing(parse_ted(R"({"n": 2, "order_e": [1, 1], "signs": [1, 1]})")); }) ==
        ErrorCode::kMalformedEncoding);
  CHECK(code_of([] { read_ted("/nonexistent.ted"); }) == ErrorCode::kFormatError);
}
