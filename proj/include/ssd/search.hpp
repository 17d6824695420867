#pragma once

// Exhaustive generation of two-edge drawings and the search for the largest
// crossing number under the admissibility conditions.
//
// Drawings are grown by walking the free end of e: at every step the end
// sits in a face of the current drawing and crosses one e' edge on that
// face's boundary. Every node of the walk tree is a complete drawing and
// every plane encoding appears exactly once in the tree.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssd/error.hpp"
#include "ssd/two_edge.hpp"

namespace ssd {

// Children of a node, in dart order: the encodings obtained by one more
// crossing of the free end of e.
std::vector<Encoding> extensions(const Encoding& encoding);

struct EnumerateFilter {
  bool deadlock_free = false;
  bool spiral_free = false;  // implies deadlock_free
  std::optional<int> max_lenses;
  SpiralOptions spiral;
};

// Calls `emit` once per symmetry class with exactly n crossings, passing the
// canonical encoding, in generation order.
void enumerate(int n, const EnumerateFilter& filter, const std::function<void(const Encoding&)>& emit);
std::vector<Encoding> enumerate(int n, const EnumerateFilter& filter = {});

struct SearchOptions {
  int k = 0;
  std::optional<int> n_cap;  // default C(k)
  std::uint64_t node_budget = 100'000'000;
  int jobs = 1;
  int split_depth = 4;
  AdmissibilityOptions admissibility;
  bool seed_incumbent = false;  // start from the doubling constructions
  std::string checkpoint_path;  // empty: no checkpoint
};

struct SearchReport {
  int k = 0;
  int n_cap = 0;
  int best = 0;                       // largest admissible N found
  std::string witness;                // canonical encoding string
  int best_by_search = 0;             // ignoring the seeded incumbent
  std::string seeded_from;            // construction that gave the incumbent
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  std::uint64_t admissible_nodes = 0;
  int subtrees = 0;
  int subtrees_exhausted = 0;         // subtrees that ran out of budget
  std::vector<std::string> violations;  // admissible drawings above C(k)
  double wall_seconds = 0;
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(SearchReport report)
      : Error(ErrorCode::kBudgetExhausted, "node budget exhausted; best found " + std::to_string(report.best)),
        report_(std::move(report)) {}
  const SearchReport& report() const { return report_; }

 private:
  SearchReport report_;
};

// Throws BudgetExhausted (carrying the best-so-far report) when some subtree
// ran out of nodes, FormatError on an incompatible checkpoint.
SearchReport max_crossings(const SearchOptions& options);

}  // namespace ssd
