// trigeo: distinct-triangle counting, 4-point classification, regular-polygon
// spectra, and extremal configuration search over finite ground sets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "trigeo/circle.hpp"
#include "trigeo/congruence.hpp"
#include "trigeo/pointfile.hpp"
#include "trigeo/quad.hpp"
#include "trigeo/search.hpp"
#include "trigeo/svg.hpp"
#include "trigeo/verify.hpp"

using nlohmann::json;
using namespace trigeo;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSemanticError = 3;

struct Global {
  std::string format = "text";
  std::string log_path;
  std::uint64_t seed = 12345;
  int jobs = 1;
};

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PointFile load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_point_file(in);
}

void append_log(const Global& g, const std::string& command, const json& params,
                const json& result, double wall_ms) {
  if (g.log_path.empty()) return;
  json rec;
  rec["schema"] = 1;
  rec["command"] = command;
  rec["parameters"] = params;
  rec["result"] = result;
  rec["wall_ms"] = wall_ms;
  rec["version"] = kVersion;
  std::ofstream out(g.log_path, std::ios::app);
  if (!out) throw SemanticError("cannot open log file '" + g.log_path + "'");
  out << rec.dump() << "\n";
}

std::string kind_name(PointFile::Kind k) {
  switch (k) {
    case PointFile::Kind::Points: return "points";
    case PointFile::Kind::Circle: return "circle";
    case PointFile::Kind::Eisenstein: return "eisenstein";
  }
  return "?";
}

// Count distinct triangles of a parsed configuration; classes as strings.
std::pair<std::uint64_t, std::vector<std::string>> count_config(const PointFile& pf) {
  std::vector<std::string> classes;
  switch (pf.kind) {
    case PointFile::Kind::Points: {
      TriangleClassSet set = distinct_triangles(pf.points);
      for (const auto& sig : set.classes)
        classes.push_back(to_string(sig.sides[0]) + " " + to_string(sig.sides[1]) +
                          " " + to_string(sig.sides[2]));
      return {set.count(), classes};
    }
    case PointFile::Kind::Circle: {
      CircleConfig cfg{pf.fractions, pf.with_center};
      std::sort(cfg.fractions.begin(), cfg.fractions.end());
      CircleClassSet set = distinct_triangles_circle(cfg);
      for (const auto& sig : set.classes)
        classes.push_back(to_string(sig[0]) + " " + to_string(sig[1]) + " " +
                          to_string(sig[2]));
      return {set.count(), classes};
    }
    case PointFile::Kind::Eisenstein: {
      for (size_t i = 0; i < pf.lattice_sites.size(); ++i)
        for (size_t j = i + 1; j < pf.lattice_sites.size(); ++j)
          if (pf.lattice_sites[i] == pf.lattice_sites[j])
            throw std::invalid_argument("duplicate points");
      if (pf.lattice_sites.size() < 3)
        throw std::invalid_argument("need at least 3 points");
      std::vector<std::array<long, 3>> cl;
      std::uint64_t n = lattice_distinct_triangles(pf.lattice_sites, &cl);
      for (const auto& t : cl)
        classes.push_back(std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
                          std::to_string(t[2]));
      return {n, classes};
    }
  }
  return {0, {}};
}

int cmd_count(const Global& g, const std::string& path, bool show_classes) {
  auto t0 = std::chrono::steady_clock::now();
  PointFile pf = load_point_file(path);
  std::uint64_t count;
  std::vector<std::string> classes;
  try {
    std::tie(count, classes) = count_config(pf);
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }

  json result;
  result["schema"] = 1;
  result["command"] = "count";
  result["kind"] = kind_name(pf.kind);
  result["n"] = pf.site_count();
  result["count"] = count;
  if (show_classes) result["classes"] = classes;

  if (g.format == "json") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "n = " << pf.site_count() << "\n";
    std::cout << "distinct triangles = " << count << "\n";
    if (count == 0) std::cout << "warning: no noncollinear triple\n";
    if (show_classes)
      for (const auto& c : classes) std::cout << "class: " << c << "\n";
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  append_log(g, "count", {{"input", path}, {"classes", show_classes}}, result, ms);
  return kExitOk;
}

int cmd_classify(const Global& g, const std::string& path) {
  auto t0 = std::chrono::steady_clock::now();
  PointFile pf = load_point_file(path);
  if (pf.kind != PointFile::Kind::Points)
    throw SemanticError("classify requires a 'points' file");
  if (pf.points.size() != 4) throw SemanticError("classify requires exactly 4 points");

  QuadCase c;
  std::uint64_t actual;
  try {
    std::array<Point, 4> pts{pf.points[0], pf.points[1], pf.points[2], pf.points[3]};
    c = classify_quad(pts);
    actual = distinct_triangles(pf.points).count();
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
  CaseBound bound = case_bound(c);

  json result;
  result["schema"] = 1;
  result["command"] = "classify";
  result["case"] = std::string(to_string(c.tag));
  result["is_rectangle"] = c.is_rectangle;
  result["is_square"] = c.is_square;
  result["is_isosceles_trapezoid"] = c.is_isosceles_trapezoid;
  result["min_distinct_triangles"] = bound.min_distinct_triangles;
  result["actual_distinct_triangles"] = actual;

  if (g.format == "json") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "case = " << to_string(c.tag);
    if (c.tag == QuadTag::Parallelogram || c.tag == QuadTag::Rhombus)
      std::cout << (c.is_square ? " (square)"
                                : (c.is_rectangle ? " (rectangle)" : ""));
    if (c.is_isosceles_trapezoid) std::cout << " (isosceles trapezoid)";
    std::cout << "\n";
    std::cout << "lower bound = " << bound.min_distinct_triangles << "\n";
    std::cout << "actual distinct triangles = " << actual << "\n";
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  append_log(g, "classify", {{"input", path}}, result, ms);
  if (actual < (std::uint64_t)bound.min_distinct_triangles) {
    std::cerr << "error: actual count below the case lower bound\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_ngon(const Global& g, std::uint64_t n, bool list) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 3) throw SemanticError("n must be at least 3");
  std::uint64_t p3 = partitions3_count(n);
  std::uint64_t rounded = nearest_integer_n2_over_12(n);
  bool agree = p3 == rounded;

  json result;
  result["schema"] = 1;
  result["command"] = "ngon";
  result["n"] = n;
  result["partitions3"] = p3;
  result["nearest_n2_over_12"] = rounded;
  result["agree"] = agree;
  if (list) {
    json parts = json::array();
    for (const auto& p : partitions3(n))
      parts.push_back({p.parts[0], p.parts[1], p.parts[2]});
    result["partitions"] = parts;
  }

  if (g.format == "json") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "p(" << n << ",3) = " << p3 << "\n";
    std::cout << "round(n^2/12) = " << rounded << "\n";
    std::cout << "agree = " << (agree ? "yes" : "no") << "\n";
    if (list)
      for (const auto& p : partitions3(n))
        std::cout << p.parts[0] << "+" << p.parts[1] << "+" << p.parts[2] << "\n";
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  append_log(g, "ngon", {{"n", n}, {"list", list}}, result, ms);
  return agree ? kExitOk : kExitVerifyFail;
}

json witness_json(const GroundSet& ground, const std::vector<int>& sites) {
  json w = json::array();
  for (int s : sites) w.push_back(ground.site_label(s));
  return w;
}

int cmd_search(const Global& g, int grid_k, int circle_d, bool center, int lattice_r,
               int n, std::int64_t exactly, std::optional<std::uint64_t> budget) {
  auto t0 = std::chrono::steady_clock::now();
  int ground_flags = (grid_k > 0) + (circle_d > 0) + (lattice_r > 0);
  if (ground_flags != 1)
    throw SemanticError("choose exactly one ground set: --grid, --circle, or --lattice");
  if (center && circle_d <= 0) throw SemanticError("--center requires --circle");
  if ((n > 0) == (exactly > 0))
    throw SemanticError("choose exactly one of --n and --exactly");

  GroundSet ground = grid_k > 0    ? GroundSet::rational_grid(grid_k)
                     : circle_d > 0 ? GroundSet::circle_divisions(circle_d, center)
                                    : GroundSet::eisenstein_ball(lattice_r);

  json result;
  result["schema"] = 1;
  result["command"] = "search";
  result["ground"] = ground.description();

  if (n > 0) {
    if (n > ground.size()) throw SemanticError("subset size exceeds ground set size");
    SearchOptions opts;
    opts.budget = budget;
    opts.jobs = g.jobs;
    SearchResult r = min_triangles(ground, n, opts);
    result["mode"] = "min";
    result["n"] = n;
    result["best_count"] = r.best_count;
    result["nodes_explored"] = r.nodes_explored;
    result["exhaustive"] = r.exhaustive;
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(ground, w));
    result["witnesses"] = ws;

    if (g.format == "json") {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << "ground = " << ground.description() << "\n";
      std::cout << "n = " << n << "\n";
      std::cout << "minimum distinct triangles = " << r.best_count << "\n";
      std::cout << "nodes explored = " << r.nodes_explored << "\n";
      std::cout << (r.exhaustive ? "exhaustive over this ground set\n"
                                 : "truncated by budget\n");
      for (const auto& w : r.witnesses) {
        std::cout << "witness:";
        for (int s : w) std::cout << " " << ground.site_label(s);
        std::cout << "\n";
      }
    }
  } else {
    FTableRow row = max_points_with_exactly(ground, (std::uint64_t)exactly);
    result["mode"] = "exactly";
    result["t"] = exactly;
    result["max_n"] = row.max_n;
    result["exhaustive"] = row.exhaustive;
    result["witness"] = row.max_n > 0 ? witness_json(ground, row.witness) : json::array();

    if (g.format == "json") {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << "ground = " << ground.description() << "\n";
      std::cout << "t = " << exactly << "\n";
      if (row.max_n == 0) {
        std::cout << "no subset determines exactly " << exactly << " triangles\n";
      } else {
        std::cout << "max n with exactly " << exactly << " triangles = " << row.max_n
                  << "\n";
        std::cout << "witness:";
        for (int s : row.witness) std::cout << " " << ground.site_label(s);
        std::cout << "\n";
      }
      std::cout << "exhaustive over this ground set\n";
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  json params = {{"grid", grid_k},   {"circle", circle_d}, {"center", center},
                 {"lattice", lattice_r}, {"n", n},         {"exactly", exactly}};
  append_log(g, "search", params, result, ms);
  return kExitOk;
}

int cmd_verify(const Global& g, const std::string& suite) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> checks;
  if (suite == "lemma")
    checks = verify_lemma(g.seed);
  else if (suite == "theorem1")
    checks = verify_theorem1();
  else if (suite == "theorem2")
    checks = verify_theorem2();
  else if (suite == "conjectures")
    checks = verify_conjectures();
  else
    throw SemanticError("unknown suite '" + suite + "'");

  json result;
  result["schema"] = 1;
  result["command"] = "verify";
  result["suite"] = suite;
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  result["checks"] = arr;
  result["all_pass"] = all_pass(checks);

  if (g.format == "json") {
    std::cout << result.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << (all_pass(checks) ? "all checks passed\n" : "FAILURES present\n");
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  append_log(g, "verify", {{"suite", suite}, {"seed", g.seed}}, result, ms);
  return all_pass(checks) ? kExitOk : kExitVerifyFail;
}

int cmd_render(const Global& g, const std::string& input, const std::string& output) {
  auto t0 = std::chrono::steady_clock::now();
  PointFile pf = load_point_file(input);
  std::string svg = render_svg(pf);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw SemanticError("cannot write '" + output + "'");
  out << svg;
  if (!out) throw SemanticError("write failed for '" + output + "'");

  json result;
  result["schema"] = 1;
  result["command"] = "render";
  result["output"] = output;
  result["bytes"] = svg.size();
  if (g.format == "json")
    std::cout << result.dump(2) << "\n";
  else
    std::cout << "wrote " << output << " (" << svg.size() << " bytes)\n";
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  append_log(g, "render", {{"input", input}, {"output", output}}, result, ms);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinct-triangle counting and extremal configuration search"};
  app.require_subcommand(1);
  // Let global flags (--format, --log, ...) appear after the subcommand too.
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--log", g.log_path, "Append a JSON run record to this file");
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--jobs", g.jobs, "Search fan-out threads")->check(CLI::PositiveNumber);

  std::string count_input;
  bool count_classes = false;
  auto* count = app.add_subcommand("count", "Count distinct triangles of a configuration");
  count->add_option("input", count_input, "Point file")->required();
  count->add_flag("--classes", count_classes, "List each congruence class");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Classify a 4-point configuration");
  classify->add_option("input", classify_input, "Point file (4 rational points)")
      ->required();

  std::uint64_t ngon_n = 0;
  bool ngon_list = false;
  auto* ngon = app.add_subcommand("ngon", "Regular n-gon triangle spectrum");
  ngon->add_option("n", ngon_n, "Number of vertices")->required();
  ngon->add_flag("--list", ngon_list, "List the partitions of n into three parts");

  int grid_k = 0, circle_d = 0, lattice_r = 0, search_n = 0;
  std::int64_t search_exactly = 0;
  bool circle_center = false;
  std::uint64_t budget_val = 0;
  auto* search = app.add_subcommand("search", "Extremal subset search over a ground set");
  search->add_option("--grid", grid_k, "k x k integer grid");
  search->add_option("--circle", circle_d, "D equal circle divisions");
  search->add_flag("--center", circle_center, "Include the circle center");
  search->add_option("--lattice", lattice_r, "Eisenstein lattice ball radius");
  search->add_option("--n", search_n, "Subset size to minimize over");
  search->add_option("--exactly", search_exactly, "Find max points with exactly t classes");
  auto* budget_opt = search->add_option("--budget", budget_val, "Class-count cap");

  std::string verify_suite;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", verify_suite, "lemma | theorem1 | theorem2 | conjectures")
      ->required();

  std::string render_input, render_output;
  auto* render = app.add_subcommand("render", "Render a configuration to SVG");
  render->add_option("input", render_input, "Point file")->required();
  render->add_option("output", render_output, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  try {
    if (count->parsed()) return cmd_count(g, count_input, count_classes);
    if (classify->parsed()) return cmd_classify(g, classify_input);
    if (ngon->parsed()) return cmd_ngon(g, ngon_n, ngon_list);
    if (search->parsed()) {
      std::optional<std::uint64_t> budget;
      if (budget_opt->count() > 0) budget = budget_val;
      return cmd_search(g, grid_k, circle_d, circle_center, lattice_r, search_n,
                        search_exactly, budget);
    }
    if (verify->parsed()) return cmd_verify(g, verify_suite);
    if (render->parsed()) return cmd_render(g, render_input, render_output);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemanticError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemanticError;
  }
  return kExitOk;
}
