#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "ssd/bounds.hpp"
#include "ssd/constructions.hpp"
#include "ssd/search.hpp"
#include "support/oracles.hpp"

using namespace ssd;

namespace {

int lens_count(const Encoding& e) { return static_cast<int>(lenses(validate(e)).size()); }

int lens_count_any(const Encoding& e) {
  int n = e.crossings(), count = 0;
  std::vector<int> pos(n + 1);
  for (int p = 0; p < n; ++p) pos[e.order_e[p]] = p;
  for (int i = 1; i < n; ++i) count += std::abs(pos[i] - pos[i + 1]) == 1;
  return count;
}

}  // namespace

TEST_CASE("the walk tree lists every plane encoding once") {
  std::vector<Encoding> level{Encoding{}};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Encoding> next;
    for (const Encoding& e : level) {
      for (Encoding& c : extensions(e)) next.push_back(std::move(c));
    }
    std::set<oracle::Code> got;
    for (const Encoding& e : next) got.emplace(e.order_e, e.signs);
    CHECK(got.size() == next.size());
    CHECK(got == oracle::all_plane(n));
    level = std::move(next);
  }
}

TEST_CASE("one more crossing changes the lens count by at most one") {
  std::vector<Encoding> level{Encoding{}};
  for (int n = 1; n <= 7; ++n) {
    std::vector<Encoding> next;
    for (const Encoding& e : level) {
      const int before = lens_count_any(e);
      for (Encoding& c : extensions(e)) {
        CHECK(std::abs(lens_count_any(c) - before) <= 1);
        next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
}

TEST_CASE("class counts match brute force") {
  CHECK(enumerate(0).size() == 1);
  CHECK(enumerate(1).size() == 1);
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(enumerate(n).size()) == oracle::brute_force_classes(n));
  }
}

TEST_CASE("enumerated encodings are canonical and filtered") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate(n);
    std::set<std::string> keys;
    for (const Encoding& e : all) {
      CHECK(canonical_encoding(e) == e);
      keys.insert(encoding_string(e));
    }
    CHECK(keys.size() == all.size());
    int deadlock_free = 0, spiral_free = 0, few_lenses = 0;
    for (const Encoding& e : all) {
      const TwoEdgeDrawing d = validate(e);
      if (is_deadlock(d)) continue;
      ++deadlock_free;
      spiral_free += !is_spiral(d);
      few_lenses += lens_count(e) <= 1;
    }
    CHECK(static_cast<int>(enumerate(n, {.deadlock_free = true}).size()) == deadlock_free);
    CHECK(static_cast<int>(enumerate(n, {.spiral_free = true}).size()) == spiral_free);
    CHECK(static_cast<int>(enumerate(n, {.deadlock_free = true, .max_lenses = 1}).size()) == few_lenses);
  }
}

TEST_CASE("maximum crossings for small k") {
  const int expected[] = {1, 2, 5};
  for (int k = 0; k <= 2; ++k) {
    SearchOptions o;
    o.k = k;
    const SearchReport r = max_crossings(o);
    CHECK(r.exhaustive);
    CHECK(r.best == expected[k]);
    CHECK(r.n_cap == c_upper(k));
    CHECK(r.violations.empty());
    const Encoding w = parse_encoding_string(r.witness);
    CHECK(admissible(validate(w), k));
  }
}

TEST_CASE("search agrees with filtered enumeration") {
  for (int k = 0; k <= 2; ++k) {
    int best = 0;
    for (int n = 0; n <= 7; ++n) {
      for (const Encoding& e : enumerate(n, {.spiral_free = true, .max_lenses = k})) {
        (void)e;
        best = n;
      }
    }
    SearchOptions o;
    o.k = k;
    o.n_cap = 7;
    CHECK(max_crossings(o).best == best);
  }
}

TEST_CASE("results do not depend on the worker count") {
  SearchOptions o;
  o.k = 3;
  o.n_cap = 11;
  o.split_depth = 5;
  o.node_budget = 3000;
  std::string witness;
  std::uint64_t nodes = 0;
  int best = 0;
  for (int jobs : {1, 3}) {
    o.jobs = jobs;
    try {
      max_crossings(o);
      FAIL("budget should run out");
    } catch (const BudgetExhausted& e) {
      if (jobs == 1) {
        witness = e.report().witness;
        nodes = e.report().nodes;
        best = e.report().best;
      } else {
        CHECK(e.report().witness == witness);
        CHECK(e.report().nodes == nodes);
        CHECK(e.report().best == best);
      }
    }
  }
}

TEST_CASE("seeded incumbent") {
  SearchOptions o;
  o.k = 3;
  o.node_budget = 10;
  o.seed_incumbent = true;
  try {
    max_crossings(o);
    FAIL("budget should run out");
  } catch (const BudgetExhausted& e) {
    CHECK(e.report().best >= 10);
    CHECK(e.report().seeded_from == "enhanced(3)");
    CHECK_FALSE(e.report().exhaustive);
  }
}

TEST_CASE("checkpoint and resume") {
  const std::string path = (std::filesystem::temp_directory_path() / "ssd_search_checkpoint.json").string();
  std::filesystem::remove(path);
  SearchOptions o;
  o.k = 2;
  o.n_cap = 7;
  o.split_depth = 3;
  o.checkpoint_path = path;
  const SearchReport first = max_crossings(o);
  std::ifstream in(path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc.at("format") == "ssd-search-checkpoint");
  CHECK(doc.at("version") == 1);
  CHECK(doc.at("frontier").empty());
  CHECK(doc.at("completed").size() == doc.at("subtrees_total").get<std::size_t>());
  const SearchReport resumed = max_crossings(o);
  CHECK(resumed.best == first.best);
  CHECK(resumed.witness == first.witness);
  CHECK(resumed.nodes == first.nodes);

  o.k = 1;
  CHECK_THROWS_AS(max_crossings(o), Error);
  std::filesystem::remove(path);
}
