#include "ssd/search.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "ssd/bounds.hpp"
#include "ssd/constructions.hpp"

namespace ssd {

namespace {

using nlohmann::json;

constexpr std::string_view kCheckpointFormat = "ssd-search-checkpoint";
constexpr int kCheckpointVersion = 1;

TwoCurveMap map_of(const Encoding& enc) {
  std::vector<int> along(enc.crossings());
  for (int i = 0; i < enc.crossings(); ++i) along[i] = i + 1;
  return TwoCurveMap::build(enc.order_e, along, enc.signs);
}

std::vector<Encoding> extensions_of(const Encoding& enc, const TwoCurveMap& m) {
  std::vector<Encoding> out;
  for (Dart d : m.face(m.endpoint_face(kEEnd)).darts) {
    const DartLabel& l = m.label(d);
    if (l.curve != Curve::kEPrime) continue;
    const int edge = l.segment;
    Encoding child;
    child.order_e.reserve(enc.crossings() + 1);
    for (int xi : enc.order_e) child.order_e.push_back(xi > edge ? xi + 1 : xi);
    child.order_e.push_back(edge + 1);
    child.signs = enc.signs;
    // The free end sits on the left of the dart it crosses; a forward e'
    // dart has the upper side on its left, so e crosses downwards.
    child.signs.insert(child.signs.begin() + edge, d % 2 == 0 ? 1 : -1);
    out.push_back(std::move(child));
  }
  return out;
}

int lens_count(const Encoding& enc) {
  const int n = enc.crossings();
  std::vector<int> pos(n + 1, 0);
  for (int p = 0; p < n; ++p) pos[enc.order_e[p]] = p;
  int lenses = 0;
  for (int i = 1; i < n; ++i) lenses += std::abs(pos[i] - pos[i + 1]) == 1;
  return lenses;
}

bool lenses_allowed(int lenses, int k, bool exact) { return exact ? lenses == k : lenses <= k; }

// Could a descendant within `remaining` more crossings reach an allowed lens
// count? A crossing changes the lens count by at most one.
bool lenses_reachable(int lenses, int remaining, int k, bool exact) {
  if (lenses - remaining > k) return false;
  return !(exact && lenses + remaining < k);
}

bool better(int n, const Encoding& canon, int best_n, const std::optional<Encoding>& best) {
  if (n != best_n) return n > best_n;
  return !best || canon < *best;
}

struct Tally {
  std::uint64_t nodes = 0;
  std::uint64_t admissible_nodes = 0;
  int best = -1;
  std::optional<Encoding> witness;  // canonical
  bool exhausted = false;
  std::vector<std::string> violations;

  void offer(int n, const Encoding& enc) {
    const Encoding canon = canonical_encoding(enc);
    if (better(n, canon, best, witness)) {
      best = n;
      witness = canon;
    }
  }
  void absorb(const Tally& t) {
    nodes += t.nodes;
    admissible_nodes += t.admissible_nodes;
    if (t.witness) offer(t.best, *t.witness);
    exhausted |= t.exhausted;
    violations.insert(violations.end(), t.violations.begin(), t.violations.end());
  }
};

class Walker {
 public:
  Walker(const SearchOptions& options, int n_cap, std::uint64_t budget)
      : opt_(options), n_cap_(n_cap), budget_(budget), bound_(c_upper(options.k)) {}

  // Visits `enc` and its descendants; stops descending at `stop_depth`,
  // handing those nodes to `frontier` instead (when given).
  void visit(const Encoding& enc, Tally& tally, int stop_depth = -1, std::vector<Encoding>* frontier = nullptr) {
    const int n = enc.crossings();
    if (frontier && n == stop_depth) {
      frontier->push_back(enc);
      return;
    }
    if (tally.nodes >= budget_) {
      tally.exhausted = true;
      return;
    }
    ++tally.nodes;
    const TwoCurveMap m = map_of(enc);
    const FaceId fa = m.endpoint_face(kEPrimeStart);
    // Faces only ever split, so once a, b and u0 are apart every
    // descendant is a deadlock.
    if (m.endpoint_face(kEPrimeEnd) != fa || m.endpoint_face(kEStart) != fa) return;
    const int lenses = lens_count(enc);
    const bool exact = opt_.admissibility.exact_k;
    if (m.endpoint_face(kEEnd) == fa && lenses_allowed(lenses, opt_.k, exact)) {
      const TwoEdgeDrawing d = validate(enc);
      if (!is_spiral(d, opt_.admissibility.spiral)) {
        ++tally.admissible_nodes;
        if (BigInt(n) > bound_) {
          tally.violations.push_back("admissible drawing with " + std::to_string(n) +
                                     " crossings exceeds the recurrence bound: " + encoding_string(enc));
        }
        tally.offer(n, enc);
      }
    }
    if (n >= n_cap_ || !lenses_reachable(lenses, n_cap_ - n, opt_.k, exact)) return;
    for (const Encoding& child : extensions_of(enc, m)) {
      if (n == 0 && child.signs[0] < 0) continue;  // mirror image of the other first move
      visit(child, tally, stop_depth, frontier);
    }
  }

 private:
  const SearchOptions& opt_;
  int n_cap_;
  std::uint64_t budget_;
  BigInt bound_;
};

json tally_json(int index, const Encoding& root, const Tally& t) {
  return json{{"index", index},
              {"root", encoding_string(root)},
              {"nodes", t.nodes},
              {"admissible_nodes", t.admissible_nodes},
              {"best", t.best},
              {"witness", t.witness ? encoding_string(*t.witness) : ""},
              {"exhausted", t.exhausted},
              {"violations", t.violations}};
}

Tally tally_from_json(const json& j) {
  Tally t;
  t.nodes = j.at("nodes").get<std::uint64_t>();
  t.admissible_nodes = j.at("admissible_nodes").get<std::uint64_t>();
  t.best = j.at("best").get<int>();
  const std::string w = j.at("witness").get<std::string>();
  if (!w.empty()) t.witness = parse_encoding_string(w);
  t.exhausted = j.at("exhausted").get<bool>();
  t.violations = j.at("violations").get<std::vector<std::string>>();
  return t;
}

json parameters_json(const SearchOptions& o, int n_cap) {
  return json{{"k", o.k},
              {"n_cap", n_cap},
              {"node_budget", o.node_budget},
              {"split_depth", o.split_depth},
              {"exact_k", o.admissibility.exact_k},
              {"spiral_mode", o.admissibility.spiral.mode == SpiralMode::kEitherEndpoint ? "either" : "both"},
              {"e_prime_side", o.admissibility.spiral.e_prime_side}};
}

void write_checkpoint(const std::string& path, const json& params, const std::vector<Encoding>& roots,
                      const std::vector<std::optional<Tally>>& done) {
  json frontier = json::array(), completed = json::array();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) completed.push_back(tally_json(static_cast<int>(i), roots[i], *done[i]));
    else frontier.push_back(encoding_string(roots[i]));
  }
  json doc{{"format", kCheckpointFormat},
           {"version", kCheckpointVersion},
           {"parameters", params},
           {"subtrees_total", roots.size()},
           {"frontier", frontier},
           {"completed", completed}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::kFormatError, "cannot write checkpoint " + tmp);
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void load_checkpoint(const std::string& path, const json& params, const std::vector<Encoding>& roots,
                     std::vector<std::optional<Tally>>& done) {
  std::ifstream in(path);
  if (!in) return;
  json doc;
  try {
    doc = json::parse(in);
    if (doc.at("format") != kCheckpointFormat || doc.at("version") != kCheckpointVersion) {
      throw Error(ErrorCode::kFormatError, "not a version " + std::to_string(kCheckpointVersion) + " search checkpoint");
    }
    if (doc.at("parameters") != params) {
      throw Error(ErrorCode::kFormatError, "checkpoint was written with different search parameters");
    }
    if (doc.at("subtrees_total").get<std::size_t>() != roots.size()) {
      throw Error(ErrorCode::kFormatError, "checkpoint splits the search differently");
    }
    for (const json& c : doc.at("completed")) {
      const int i = c.at("index").get<int>();
      if (i < 0 || i >= static_cast<int>(roots.size()) || c.at("root") != encoding_string(roots[i])) {
        throw Error(ErrorCode::kFormatError, "checkpoint subtree " + std::to_string(i) + " does not match");
      }
      done[i] = tally_from_json(c);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, std::string("bad checkpoint: ") + e.what());
  }
}

}  // namespace

std::vector<Encoding> extensions(const Encoding& encoding) { return extensions_of(encoding, map_of(encoding)); }

void enumerate(int n, const EnumerateFilter& filter, const std::function<void(const Encoding&)>& emit) {
  if (n < 0) throw Error(ErrorCode::kMalformedEncoding, "crossing count must be non-negative");
  const bool deadlock_free = filter.deadlock_free || filter.spiral_free;
  std::function<void(const Encoding&)> walk = [&](const Encoding& enc) {
    const TwoCurveMap m = map_of(enc);
    if (deadlock_free) {
      const FaceId fa = m.endpoint_face(kEPrimeStart);
      if (m.endpoint_face(kEPrimeEnd) != fa || m.endpoint_face(kEStart) != fa) return;
    }
    const int lenses = lens_count(enc);
    if (filter.max_lenses && !lenses_reachable(lenses, n - enc.crossings(), *filter.max_lenses, false)) return;
    if (enc.crossings() < n) {
      for (const Encoding& child : extensions_of(enc, m)) walk(child);
      return;
    }
    if (canonical_encoding(enc) != enc) return;
    if (filter.max_lenses && lenses > *filter.max_lenses) return;
    if (deadlock_free) {
      const TwoEdgeDrawing d = validate(enc);
      if (is_deadlock(d)) return;
      if (filter.spiral_free && is_spiral(d, filter.spiral)) return;
    }
    emit(enc);
  };
  walk(Encoding{});
}

std::vector<Encoding> enumerate(int n, const EnumerateFilter& filter) {
  std::vector<Encoding> out;
  enumerate(n, filter, [&out](const Encoding& e) { out.push_back(e); });
  return out;
}

SearchReport max_crossings(const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.k < 0) throw Error(ErrorCode::kMalformedEncoding, "k must be non-negative");
  const BigInt cap = c_upper(options.k);
  const int n_cap = options.n_cap ? *options.n_cap : (cap > 4096 ? 4096 : cap.convert_to<int>());
  if (n_cap < 0) throw Error(ErrorCode::kMalformedEncoding, "n_cap must be non-negative");
  const int split = std::max(0, std::min(options.split_depth, n_cap));

  // Top of the tree, evaluated here; nodes at the split depth become subtrees.
  Tally top;
  std::vector<Encoding> roots;
  Walker(options, n_cap, UINT64_MAX).visit(Encoding{}, top, split, &roots);

  const std::uint64_t left = options.node_budget > top.nodes ? options.node_budget - top.nodes : 0;
  const std::uint64_t per_subtree = roots.empty() ? 0 : std::max<std::uint64_t>(1, left / roots.size());

  const json params = parameters_json(options, n_cap);
  std::vector<std::optional<Tally>> done(roots.size());
  if (!options.checkpoint_path.empty()) load_checkpoint(options.checkpoint_path, params, roots, done);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto work = [&] {
    Walker walker(options, n_cap, per_subtree);
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      {
        std::lock_guard lock(mu);
        if (done[i]) continue;
      }
      Tally t;
      walker.visit(roots[i], t);
      std::lock_guard lock(mu);
      done[i] = std::move(t);
      if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, params, roots, done);
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  Tally total = top;
  SearchReport report;
  for (const auto& t : done) {
    total.absorb(*t);
    report.subtrees_exhausted += t->exhausted;
  }
  report.k = options.k;
  report.n_cap = n_cap;
  report.nodes = total.nodes;
  report.admissible_nodes = total.admissible_nodes;
  report.subtrees = static_cast<int>(roots.size());
  report.exhaustive = !total.exhausted;
  report.violations = total.violations;
  report.best_by_search = std::max(total.best, 0);
  report.best = report.best_by_search;
  if (total.witness) report.witness = encoding_string(*total.witness);

  if (options.seed_incumbent) {
    std::vector<ConstructionRecipe> seeds;
    for (int j = 0; j <= std::min(options.k, 20); ++j) seeds.push_back(recipe(ConstructionKind::kDoubling, j));
    for (int j = 2; j <= std::min(options.k, 20); ++j) seeds.push_back(recipe(ConstructionKind::kEnhanced, j));
    for (const ConstructionRecipe& r : seeds) {
      if (r.expected_crossings > n_cap || r.expected_crossings <= report.best) continue;
      const TwoEdgeDrawing d = construct(r);
      if (!admissible(d, options.k, options.admissibility)) continue;
      report.best = d.crossings();
      report.witness = canonical_form(d);
      report.seeded_from = std::string(to_string(r.kind)) + "(" + std::to_string(r.size) + ")";
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (!report.exhaustive) throw BudgetExhausted(report);
  return report;
}

}  // namespace ssd
