// Command-line front end.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssd/bounds.hpp"
#include "ssd/constructions.hpp"
#include "ssd/error.hpp"
#include "ssd/geo_verify.hpp"
#include "ssd/properties.hpp"
#include "ssd/search.hpp"
#include "ssd/svg.hpp"
#include "ssd/ted.hpp"

using namespace ssd;
using nlohmann::ordered_json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Global {
  std::string format = "text";
  bool timing = false;
  bool json() const { return format == "json"; }
};

std::string spiral_mode_name(SpiralMode m) { return m == SpiralMode::kEitherEndpoint ? "either" : "both"; }

SpiralOptions spiral_options(const std::string& mode, bool e_prime_side) {
  SpiralOptions o;
  o.mode = mode == "both" ? SpiralMode::kBothEndpoints : SpiralMode::kEitherEndpoint;
  o.e_prime_side = e_prime_side;
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kFormatError, "cannot write " + path);
  out << text;
}

ordered_json keys(const std::vector<FaceId>& faces) {
  ordered_json j = ordered_json::array();
  for (FaceId f : faces) j.push_back(f.key);
  return j;
}

// construct / render input: a .ted file or a recipe.
struct Source {
  std::string file;
  std::string kind;
  int size = -1;

  void add(CLI::App* app, bool file_allowed) {
    if (file_allowed) app->add_option("file", file, ".ted drawing")->check(CLI::ExistingFile);
    app->add_option("--kind", kind, "twist | spiral | doubling | enhanced")
        ->check(CLI::IsMember({"twist", "spiral", "doubling", "enhanced"}));
    app->add_option("-k,--k,--m,--size", size, "construction size (k for doubling/enhanced, m for twist)");
  }

  TwoEdgeDrawing load() const {
    if (!file.empty()) {
      if (!kind.empty()) throw CLI::ValidationError("give either a file or --kind, not both");
      return to_drawing(read_ted(file));
    }
    if (kind.empty()) throw CLI::RequiredError("a .ted file or --kind");
    const ConstructionKind ck = parse_construction_kind(kind);
    if (ck != ConstructionKind::kSpiral && size < 0) throw CLI::RequiredError("--k/--m");
    return construct(recipe(ck, ck == ConstructionKind::kSpiral ? 0 : size));
  }
};

int run_construct(const Global& g, const Source& src, const std::string& out) {
  const TwoEdgeDrawing d = src.load();
  const std::string ted = serialize_ted(to_ted(d));
  if (!out.empty()) write_text(out, ted);
  if (g.json()) {
    std::cout << ordered_json{{"encoding", encoding_string(d.encoding)},
                              {"crossings", d.crossings()},
                              {"lenses", lenses(d).size()},
                              {"canonical", canonical_form(d)}}
                     .dump(2)
              << "\n";
  } else if (out.empty()) {
    std::cout << ted;
  } else {
    std::cout << "wrote " << out << " (" << d.crossings() << " crossings, " << lenses(d).size() << " lenses)\n";
  }
  return 0;
}

struct AnalyzeFlags {
  std::string spiral_mode = "either";
  bool e_prime_side = false;
  std::optional<int> k;
};

int run_analyze(const Global& g, const Source& src, const AnalyzeFlags& f) {
  const TwoEdgeDrawing d = src.load();
  const SpiralOptions so = spiral_options(f.spiral_mode, f.e_prime_side);
  const bool deadlock = is_deadlock(d);
  const auto ends = endpoint_faces(d);
  const HittingReport hit = check_hitting(d);

  ordered_json j;
  j["encoding"] = encoding_string(d.encoding);
  j["canonical"] = canonical_form(d);
  j["crossings"] = d.crossings();
  j["outer"] = d.outer ? ordered_json(d.outer->key) : ordered_json(nullptr);
  ordered_json faces = ordered_json::array();
  const char* end_names[4] = {"a", "b", "u0", "u1"};
  for (const Face& face : d.map.faces()) {
    ordered_json fj{{"key", face.id.key}, {"size", face.darts.size()}};
    ordered_json on = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
      if (ends[i] == face.id) on.push_back(end_names[i]);
    }
    fj["endpoints"] = on;
    fj["markers"] = std::count(d.points.begin(), d.points.end(), face.id);
    faces.push_back(fj);
  }
  j["faces"] = faces;
  j["lenses"] = lenses(d);
  j["deadlock"] = deadlock;
  if (d.outer) {
    const std::vector<Bag> bs = bags(d);
    const LaminarForest forest = laminar_forest(d, bs);
    ordered_json bj = ordered_json::array();
    for (const Bag& b : bs) {
      bj.push_back({{"index", b.index},
                    {"lens", b.lens},
                    {"parent", forest.parent[b.index]},
                    {"depth", forest.depth[b.index]},
                    {"interior", keys(b.interior)}});
    }
    j["bags"] = bj;
  } else {
    j["bags"] = nullptr;
  }
  j["hitting_number"] = hit.hitting_number;
  j["empty_lenses"] = hit.empty_lenses;
  std::optional<bool> spiral;
  if (!deadlock) spiral = is_spiral(d, so);
  j["spiral"] = spiral ? ordered_json(*spiral) : ordered_json(nullptr);
  j["spiral_mode"] = spiral_mode_name(so.mode);
  const int k = f.k.value_or(static_cast<int>(lenses(d).size()));
  AdmissibilityOptions ao;
  ao.spiral = so;
  j["k"] = k;
  j["admissible"] = admissible(d, k, ao);
  if (!deadlock && !*spiral && hit.ok) {
    const PropertyReport pr = check_properties(d, so);
    ordered_json routes = ordered_json::array();
    for (const RouteCheck& rc : pr.routes) {
      routes.push_back({{"lens", rc.lens},
                        {"target", rc.target == kEStart ? "u0" : "u1"},
                        {"crossings", rc.crossings},
                        {"gaps", rc.gaps},
                        {"pair", rc.fresh_encoding}});
    }
    j["properties"] = {{"ok", pr.ok()}, {"routes", routes}, {"violations", pr.violations}};
  } else {
    j["properties"] = nullptr;
  }

  if (g.json()) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto yes = [](bool b) { return b ? "true" : "false"; };
  std::cout << "encoding: " << j["encoding"].get<std::string>() << "\n"
            << "canonical: " << j["canonical"].get<std::string>() << "\n"
            << "N=" << d.crossings() << " faces=" << d.map.face_count() << " lenses=" << lenses(d).size()
            << " deadlock=" << yes(deadlock) << " spiral=" << (spiral ? yes(*spiral) : "n/a") << "\n"
            << "outer face: " << (d.outer ? std::to_string(d.outer->key) : "none") << "\n"
            << "faces:\n";
  for (const auto& fj : j["faces"]) {
    std::cout << "  " << fj["key"].get<int>() << ": " << fj["size"].get<int>() << " sides";
    for (const auto& e : fj["endpoints"]) std::cout << " " << e.get<std::string>();
    if (fj["markers"].get<int>() > 0) std::cout << " markers=" << fj["markers"].get<int>();
    std::cout << "\n";
  }
  if (!j["bags"].is_null()) {
    std::cout << "bags:\n";
    for (const auto& b : j["bags"]) {
      std::cout << "  " << b["index"].get<int>() << (b["lens"].get<bool>() ? " lens" : "") << " parent="
                << b["parent"].get<int>() << " depth=" << b["depth"].get<int>() << " interior=" << b["interior"].dump()
                << "\n";
    }
  }
  std::cout << "hitting number: " << hit.hitting_number << " empty lenses: " << j["empty_lenses"].dump() << "\n"
            << "admissible (k=" << k << "): " << yes(j["admissible"].get<bool>()) << "\n";
  if (!j["properties"].is_null()) {
    std::cout << "properties: " << (j["properties"]["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
    for (const auto& r : j["properties"]["routes"]) {
      std::cout << "  lens " << r["lens"].get<int>() << " -> " << r["target"].get<std::string>() << ": "
                << r["crossings"].get<int>() << " crossings, gaps " << r["gaps"].dump() << "\n";
    }
    for (const auto& v : j["properties"]["violations"]) std::cout << "  " << v.get<std::string>() << "\n";
  }
  return 0;
}

int run_bounds(const Global& g, std::optional<int> n, std::optional<int> k) {
  if (!n && !k) throw CLI::RequiredError("--n or --k");
  ordered_json j;
  std::ostringstream text;
  if (k) {
    if (*k < 0) throw CLI::ValidationError("--k must be non-negative");
    ordered_json rows = ordered_json::array();
    text << "k\tC(k)\t2^k\t2^k+2^(k-2)\n";
    for (int i = 0; i <= *k; ++i) {
      const LowerBounds lb = lower_bounds(i);
      rows.push_back({{"k", i},
                      {"c_upper", c_upper(i).str()},
                      {"doubling", lb.doubling.str()},
                      {"enhanced", lb.enhanced ? ordered_json(lb.enhanced->str()) : ordered_json(nullptr)}});
      text << i << "\t" << c_upper(i) << "\t" << lb.doubling << "\t" << (lb.enhanced ? lb.enhanced->str() : "-")
           << "\n";
    }
    j["k"] = *k;
    j["c_upper"] = c_upper(*k).str();
    j["table"] = rows;
  }
  if (n) {
    const BoundTable t = bounds_for_n(*n);
    j["n"] = {{"n", t.n},
              {"pair_bound", t.pair_bound.str()},
              {"total_bound", t.total_bound.str()},
              {"c_upper_n_minus_4", t.c_upper_n4.str()},
              {"pair_dominates_recurrence", t.pair_dominates_recurrence}};
    text << "n=" << t.n << "\tpair bound 3(n-4)!=" << t.pair_bound << "\ttotal bound n!=" << t.total_bound
         << "\tC(n-4)=" << t.c_upper_n4 << "\n";
  }
  std::cout << (g.json() ? j.dump(2) + "\n" : text.str());
  return 0;
}

struct SearchFlags {
  int k = 0;
  std::optional<int> n_cap;
  double budget = 1e8;
  int jobs = 1;
  int split_depth = 4;
  std::string checkpoint;
  bool seed = false;
  bool exact_k = false;
  std::string spiral_mode = "either";
  bool e_prime_side = false;
};

ordered_json search_json(const SearchReport& r, bool timing) {
  ordered_json j{{"k", r.k},
                 {"n_cap", r.n_cap},
                 {"best", r.best},
                 {"witness", r.witness},
                 {"best_by_search", r.best_by_search},
                 {"seeded_from", r.seeded_from},
                 {"exhaustive", r.exhaustive},
                 {"nodes", r.nodes},
                 {"admissible_nodes", r.admissible_nodes},
                 {"subtrees", r.subtrees},
                 {"subtrees_out_of_budget", r.subtrees_exhausted},
                 {"violations", r.violations}};
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

int run_search(const Global& g, const SearchFlags& f) {
  if (f.budget < 1 || f.budget > 1.8e19) throw CLI::ValidationError("--budget out of range");
  SearchOptions o;
  o.k = f.k;
  o.n_cap = f.n_cap;
  o.node_budget = static_cast<std::uint64_t>(std::llround(f.budget));
  o.jobs = f.jobs;
  o.split_depth = f.split_depth;
  o.checkpoint_path = f.checkpoint;
  o.seed_incumbent = f.seed;
  o.admissibility.exact_k = f.exact_k;
  o.admissibility.spiral = spiral_options(f.spiral_mode, f.e_prime_side);
  SearchReport r;
  int code = 0;
  try {
    r = max_crossings(o);
  } catch (const BudgetExhausted& e) {
    r = e.report();
    code = kExitBudget;
  }
  if (g.json()) {
    std::cout << search_json(r, g.timing).dump(2) << "\n";
  } else {
    std::cout << "k=" << r.k << " n_cap=" << r.n_cap << " best=" << r.best << " witness=" << r.witness << "\n"
              << (r.exhaustive ? "exhaustive" : "NOT exhaustive (budget ran out)") << ": " << r.nodes << " nodes, "
              << r.admissible_nodes << " admissible, " << r.subtrees << " subtrees\n";
    if (!r.seeded_from.empty()) std::cout << "seeded from " << r.seeded_from << "; search alone found " << r.best_by_search << "\n";
    for (const auto& v : r.violations) std::cout << "VIOLATION " << v << "\n";
    if (g.timing) std::cout << "wall " << r.wall_seconds << " s\n";
  }
  if (!r.violations.empty()) return kExitViolation;
  return code;
}

int run_verify(const Global& g, const std::string& file, const std::string& report_path, bool all_lenses, int jobs) {
  const GeometricDrawing gd = read_gdr(file);
  VerifyOptions o;
  o.all_lenses = all_lenses;
  o.jobs = jobs;
  const VerificationReport r = verify(gd, o);
  const ordered_json j = report_json(r);
  if (!report_path.empty()) write_text(report_path, j.dump(2) + "\n");
  if (g.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n=" << r.n << " edges=" << gd.edges.size() << " complete=" << (r.complete ? "yes" : "no")
              << " star-simple=" << (r.star_simple ? "yes" : "no") << " crossings=" << r.total_crossings << "\n";
    if (r.pair_bound) std::cout << "bounds: pair " << *r.pair_bound << ", total " << *r.total_bound << "\n";
    for (const PairReport& p : r.pairs) {
      if (p.adjacent || p.crossings == 0) continue;
      std::cout << "  edges " << p.a << "," << p.b << ": " << p.crossings << " crossings, " << p.lenses << " lenses";
      if (!p.empty_lenses.empty()) std::cout << ", " << p.empty_lenses.size() << " empty";
      std::cout << "\n";
    }
    for (const Finding& f : r.violations) std::cout << "VIOLATION " << f.kind << ": " << f.detail << "\n";
    std::cout << (r.pass() ? "pass" : "violation") << "\n";
  }
  return r.pass() ? 0 : kExitViolation;
}

int run_render(const Source& src, const std::string& out, int unit) {
  RenderStyle style;
  style.unit = unit;
  const std::string svg = render_svg(src.load(), style);
  if (out.empty()) {
    std::cout << svg;
  } else {
    write_text(out, svg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-edge drawings: constructions, analysis, search, bounds and geometric verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", g.timing, "include wall-clock time in search output");

  Source construct_src, analyze_src, render_src;
  std::string construct_out, render_out;
  auto* construct_cmd = app.add_subcommand("construct", "build a construction and print or save it as .ted");
  construct_src.add(construct_cmd, false);
  construct_cmd->add_option("--out,-o", construct_out, "write the .ted here");

  AnalyzeFlags af;
  auto* analyze_cmd = app.add_subcommand("analyze", "faces, bags, forest, lenses and predicates of a drawing");
  analyze_src.add(analyze_cmd, true);
  analyze_cmd->add_option("--spiral-mode", af.spiral_mode)->check(CLI::IsMember({"either", "both"}));
  analyze_cmd->add_flag("--e-prime-side", af.e_prime_side, "experimental spiral test with roles swapped");
  analyze_cmd->add_option("--lens-budget", af.k, "k for the admissibility test (default: number of lenses)");

  SearchFlags sf;
  auto* search_cmd = app.add_subcommand("search", "largest admissible crossing number for k lenses");
  search_cmd->add_option("--k", sf.k, "lens budget")->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--n-cap", sf.n_cap, "largest N explored (default C(k))")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--budget", sf.budget, "node budget, e.g. 1e8");
  search_cmd->add_option("--jobs", sf.jobs)->check(CLI::PositiveNumber);
  search_cmd->add_option("--split-depth", sf.split_depth)->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--checkpoint", sf.checkpoint, "checkpoint file, resumed when present");
  search_cmd->add_flag("--seed-incumbent", sf.seed, "start from the best construction");
  search_cmd->add_flag("--exact-k", sf.exact_k, "require exactly k lenses");
  search_cmd->add_option("--spiral-mode", sf.spiral_mode)->check(CLI::IsMember({"either", "both"}));
  search_cmd->add_flag("--e-prime-side", sf.e_prime_side, "experimental spiral test with roles swapped");

  std::optional<int> bounds_n, bounds_k;
  auto* bounds_cmd = app.add_subcommand("bounds", "recurrence, construction and drawing bounds");
  bounds_cmd->add_option("--n", bounds_n, "number of vertices (>= 4)");
  bounds_cmd->add_option("--k", bounds_k, "lens budget");

  std::string verify_file, verify_report;
  bool all_lenses = false;
  int verify_jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "check a polyline drawing (.gdr)");
  verify_cmd->add_option("file", verify_file, ".gdr drawing")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--report", verify_report, "write the JSON report here");
  verify_cmd->add_flag("--all-lenses", all_lenses, "also list empty two-sided faces that are not lenses");
  verify_cmd->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);

  int unit = 40;
  auto* render_cmd = app.add_subcommand("render", "SVG picture of a wrap-free drawing");
  render_src.add(render_cmd, true);
  render_cmd->add_option("--out,-o", render_out, "write the SVG here");
  render_cmd->add_option("--unit", unit, "px between crossings")->check(CLI::Range(4, 400));

  try {
    app.parse(argc, argv);
    if (*construct_cmd) return run_construct(g, construct_src, construct_out);
    if (*analyze_cmd) return run_analyze(g, analyze_src, af);
    if (*search_cmd) return run_search(g, sf);
    if (*bounds_cmd) return run_bounds(g, bounds_n, bounds_k);
    if (*verify_cmd) return run_verify(g, verify_file, verify_report, all_lenses, verify_jobs);
    if (*render_cmd) return run_render(render_src, render_out, unit);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
