#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "ssd/constructions.hpp"
#include "ssd/error.hpp"
#include "ssd/two_edge.hpp"

using namespace ssd;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::kFormatError;
}

// Bag interiors as sets of face keys, recomputed by flooding from the outer
// face without crossing g_i or h_i.
std::set<Dart> oracle_bag(const TwoEdgeDrawing& d, int i) {
  const TwoCurveMap& m = d.map;
  const int p = d.e_position(i), q = d.e_position(i + 1);
  auto blocked = [&](Dart x) {
    const DartLabel& l = m.label(x);
    if (l.curve == Curve::kEPrime) return l.segment == i;
    return l.segment >= std::min(p, q) && l.segment < std::max(p, q);
  };
  std::set<Dart> outside{d.outer->key};
  std::vector<Dart> stack{d.outer->key};
  while (!stack.empty()) {
    const Dart f = stack.back();
    stack.pop_back();
    for (Dart x : m.face(FaceId{f}).darts) {
      if (blocked(x)) continue;
      const Dart g = m.face_of(m.twin(x)).key;
      if (outside.insert(g).second) stack.push_back(g);
    }
  }
  std::set<Dart> inside;
  for (const Face& f : m.faces()) {
    if (!outside.count(f.id.key)) inside.insert(f.id.key);
  }
  return inside;
}

}  // namespace

TEST_CASE("validate") {
  SUBCASE("single crossing") {
    const TwoEdgeDrawing d = validate(Encoding{{1}, {1}});
    CHECK(d.crossings() == 1);
    CHECK(d.map.face_count() == 1);
    CHECK(bags(d).empty());
    CHECK(lenses(d).empty());
    CHECK_FALSE(is_deadlock(d));
    CHECK_FALSE(is_spiral(d));
  }
  SUBCASE("lens of two crossings") {
    const TwoEdgeDrawing d = validate(doubling_encoding(1));
    CHECK(d.crossings() == 2);
    CHECK(d.outer == d.map.endpoint_face(kEStart));
  }
  SUBCASE("sign patterns that need a handle") {
    // Fixed order 1,3,2,4: enumerate sign choices, keep those whose face
    // count violates the plane Euler relation.
    int rejected = 0;
    for (int mask = 0; mask < 16; ++mask) {
      Encoding enc{{1, 3, 2, 4}, {}};
      for (int i = 0; i < 4; ++i) enc.signs.push_back((mask >> i) & 1 ? 1 : -1);
      try {
        validate(enc);
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::kEulerViolation);
        ++rejected;
      }
    }
    CHECK(rejected > 0);
    CHECK(code_of([] { validate(Encoding{{1, 3, 2, 4}, {1, 1, 1, 1}}); }) == ErrorCode::kEulerViolation);
  }
  SUBCASE("malformed") {
    CHECK(code_of([] { validate(Encoding{{1, 1}, {1, -1}}); }) == ErrorCode::kMalformedEncoding);
    CHECK(code_of([] { validate(Encoding{{1, 2}, {1}}); }) == ErrorCode::kMalformedEncoding);
  }
  SUBCASE("points and outer") {
    const Encoding enc = doubling_encoding(1);
    CHECK(code_of([&] { validate(enc, {FaceId{999}}); }) == ErrorCode::kBadPointFace);
    CHECK(code_of([&] { validate(enc, std::vector<FaceId>{}, FaceId{999}); }) == ErrorCode::kInvalidOuter);
    const TwoEdgeDrawing d = validate(enc);
    const FaceId lens = lens_face(d, 1);
    CHECK(code_of([&] { validate(enc, std::vector<FaceId>{}, lens); }) == ErrorCode::kInvalidOuter);
  }
}

TEST_CASE("deadlocks") {
  const Encoding left{{1, 2}, {-1, -1}};
  const Encoding right{{2, 1, 3}, {1, -1, -1}};
  for (const Encoding& enc : {left, right}) {
    const TwoEdgeDrawing d = validate(enc);
    CHECK(is_deadlock(d));
    CHECK_FALSE(d.outer.has_value());
    CHECK(code_of([&] { bags(d); }) == ErrorCode::kNoOuterFace);
    CHECK(code_of([&] { validate(enc, AutoLens{}); }) == ErrorCode::kNoOuterFace);
    CHECK(code_of([&] { is_spiral(d); }) == ErrorCode::kDeadlockDrawing);
    CHECK_FALSE(admissible(d, 10));
  }
  const TwoEdgeDrawing l = validate(left);
  // The loop of e encloses one end of e' together with the last end of e.
  const auto ends = endpoint_faces(l);
  CHECK(ends[2] != ends[3]);
  CHECK(ends[0] != ends[1]);
  CHECK(((ends[0] == ends[2] && ends[1] == ends[3]) || (ends[0] == ends[3] && ends[1] == ends[2])));
  // With an explicit outer face the bag structure is available.
  const TwoEdgeDrawing lo = validate(left, std::vector<FaceId>{}, ends[2]);
  CHECK(bags(lo).size() == 1);
}

TEST_CASE("bags and the laminar forest") {
  for (int k = 1; k <= 5; ++k) {
    const TwoEdgeDrawing d = doubling(k);
    const auto list = bags(d);
    REQUIRE(static_cast<int>(list.size()) == d.crossings() - 1);
    for (const Bag& b : list) {
      std::set<Dart> got;
      for (FaceId f : b.interior) got.insert(f.key);
      CHECK(got == oracle_bag(d, b.index));
      CHECK(b.lens == (std::abs(d.e_position(b.index) - d.e_position(b.index + 1)) == 1));
      if (b.lens) CHECK(b.interior.size() == 1);
      CHECK_FALSE(std::binary_search(b.interior.begin(), b.interior.end(), *d.outer));
    }
    const LaminarForest forest = laminar_forest(d, list);
    for (const Bag& a : list) {
      for (const Bag& b : list) {
        if (a.index == b.index) continue;
        std::vector<FaceId> common;
        std::set_intersection(a.interior.begin(), a.interior.end(), b.interior.begin(), b.interior.end(),
                              std::back_inserter(common));
        const bool nested = std::includes(a.interior.begin(), a.interior.end(), b.interior.begin(),
                                          b.interior.end()) ||
                            std::includes(b.interior.begin(), b.interior.end(), a.interior.begin(),
                                          a.interior.end());
        CHECK((common.empty() || nested));
      }
      if (forest.parent[a.index] != 0) {
        const Bag& p = list[forest.parent[a.index] - 1];
        CHECK(p.interior.size() > a.interior.size());
      }
    }
    CHECK(static_cast<int>(lenses(d).size()) == k);
  }
}

TEST_CASE("doubling(1) has a single root bag holding the lens") {
  const TwoEdgeDrawing d = doubling(1);
  const auto list = bags(d);
  REQUIRE(list.size() == 1);
  CHECK(list[0].lens);
  CHECK(list[0].interior == std::vector<FaceId>{lens_face(d, 1)});
  CHECK(laminar_forest(d).parent[1] == 0);
}

TEST_CASE("doubling(2) bags") {
  const TwoEdgeDrawing d = doubling(2);
  const auto list = bags(d);
  CHECK(list.size() == 3);
  CHECK(std::count_if(list.begin(), list.end(), [](const Bag& b) { return b.lens; }) == 2);
}

TEST_CASE("twist lenses are empty") {
  for (int m = 1; m <= 8; ++m) {
    const TwoEdgeDrawing d = twist(m);
    CHECK(static_cast<int>(bags(d).size()) == m - 1);
    CHECK(static_cast<int>(lenses(d).size()) == m - 1);
    const HittingReport r = check_hitting(d);
    CHECK(r.hitting_number == m - 1);
    CHECK(r.ok == (m < 2));
  }
  const HittingReport r3 = check_hitting(twist(3));
  CHECK(r3.hitting_number == 2);
  CHECK_FALSE(r3.ok);
  CHECK(r3.empty_lenses == std::vector<int>{1, 2});
  const HittingReport filled = check_hitting(validate(twist_encoding(3), AutoLens{}));
  CHECK(filled.ok);
}

TEST_CASE("hitting") {
  const TwoEdgeDrawing d = doubling(2);
  CHECK(d.points.size() == 2);
  const HittingReport with = check_hitting(d);
  CHECK(with.hitting_number == 2);
  CHECK(with.ok);
  const HittingReport without = check_hitting(validate(d.encoding));
  CHECK(without.hitting_number == 2);
  CHECK_FALSE(without.ok);
}

TEST_CASE("minimal curves follow the ancestor chain") {
  for (int k = 1; k <= 5; ++k) {
    const TwoEdgeDrawing d = doubling(k);
    const LaminarForest forest = laminar_forest(d);
    for (int lens : lenses(d)) {
      for (Vertex target : {kEStart, kEEnd}) {
        const CurveRoute r = minimal_curve(d, lens, target);
        CHECK(r.gaps == forest.chain(lens));
        CHECK(static_cast<int>(r.crossed.size()) == forest.depth[lens]);
        CHECK(r.face_path.front() == lens_face(d, lens));
        CHECK(r.face_path.back() == *d.outer);
        CHECK_FALSE(route_deadlocks(d, r));
      }
    }
  }
  const CurveRoute one = minimal_curve(doubling(1), 1, kEStart);
  CHECK(one.gaps == std::vector<int>{1});
}

TEST_CASE("spiral") {
  const TwoEdgeDrawing d = spiral_example();
  CHECK_FALSE(is_deadlock(d));
  CHECK(lenses(d) == std::vector<int>{2, 3});
  CHECK(is_spiral(d));
  const LaminarForest forest = laminar_forest(d);
  CHECK(forest.chain(3) == std::vector<int>{3, 1, 5});
  bool some = false;
  for (Vertex target : {kEStart, kEEnd}) some |= route_deadlocks(d, minimal_curve(d, 3, target));
  CHECK(some);
  for (int k = 0; k <= 8; ++k) CHECK_FALSE(admissible(d, k));
  for (int k = 0; k <= 5; ++k) CHECK_FALSE(is_spiral(doubling(k)));
  CHECK_FALSE(is_spiral(twist(5)));
}

TEST_CASE("admissible") {
  const TwoEdgeDrawing d = doubling(2);
  CHECK(admissible(d, 2));
  CHECK(admissible(d, 3));
  CHECK_FALSE(admissible(d, 3, {.exact_k = true}));
  CHECK_FALSE(admissible(d, 1));
}

TEST_CASE("canonical form") {
  const Encoding enc = doubling_encoding(2);
  const std::string c = canonical_form(enc);
  CHECK(canonical_form(canonical_encoding(enc)) == c);
  CHECK(canonical_form(transform(enc, false, false, true)) == c);
  for (int g = 0; g < 8; ++g) {
    const Encoding t = transform(enc, g & 1, g & 2, g & 4);
    CHECK(canonical_form(t) == c);
    CHECK(validate(t).map.face_count() == 4);
    CHECK(is_spiral(validate(t)) == false);
  }
  CHECK(canonical_form(spiral_encoding()) == canonical_form(transform(spiral_encoding(), true, true, false)));
  CHECK(is_spiral(validate(transform(spiral_encoding(), true, false, true))));
  CHECK(encoding_string(Encoding{}) == "0::");
  CHECK(parse_encoding_string(encoding_string(enc)) == enc);
}

TEST_CASE("N=2 encodings group into classes under the symmetries") {
  // Naive grouping: union encodings that map to each other under any group element.
  std::vector<Encoding> all;
  for (std::vector<int> order : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    for (int mask = 0; mask < 4; ++mask) all.push_back(Encoding{order, {mask & 1 ? 1 : -1, mask & 2 ? 1 : -1}});
  }
  std::map<std::string, std::set<std::string>> by_canonical;
  for (const Encoding& e : all) by_canonical[canonical_form(e)].insert(encoding_string(e));
  for (const auto& [key, members] : by_canonical) {
    for (const std::string& m : members) {
      const Encoding e = parse_encoding_string(m);
      bool reaches = false;
      for (int g = 0; g < 8; ++g) reaches |= encoding_string(transform(e, g & 1, g & 2, g & 4)) == key;
      CHECK(reaches);
    }
  }
  // Reversing e relates [1,2] with [2,1].
  const Encoding a{{1, 2}, {1, -1}};
  CHECK(canonical_form(a) == canonical_form(transform(a, true, false, false)));
  CHECK(transform(a, true, false, false).order_e == std::vector<int>{2, 1});
}

TEST_CASE("swapping roles is an involution") {
  for (const Encoding& enc : {doubling_encoding(3), spiral_encoding(), enhanced_encoding(3)}) {
    CHECK(swap_roles(swap_roles(enc)) == enc);
    CHECK(validate(swap_roles(enc)).map.face_count() == enc.crossings());
  }
}
