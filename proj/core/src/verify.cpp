#include "trigeo/verify.hpp"

#include <random>
#include <sstream>

#include "trigeo/circle.hpp"
#include "trigeo/congruence.hpp"
#include "trigeo/quad.hpp"
#include "trigeo/search.hpp"

namespace trigeo {

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 8);
  return Rational(num(rng), den(rng));
}

Point random_point(std::mt19937_64& rng) {
  return Point{random_rational(rng), random_rational(rng)};
}

bool valid_quad(const std::array<Point, 4>& q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) return false;
  for (int i = 0; i < 4; ++i) {
    int a = (i + 1) % 4, b = (i + 2) % 4, c = (i + 3) % 4;
    if (orientation(q[a], q[b], q[c]) != 0) return true;
  }
  return false;
}

// Mixture of generic and deliberately special quadruples so the rarer Lemma
// cases actually come up.
std::array<Point, 4> random_quad(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 9);
  for (;;) {
    std::array<Point, 4> q;
    switch (shape(rng)) {
      case 0: {  // parallelogram (sometimes rectangle)
        Point a = random_point(rng), b = random_point(rng), d = random_point(rng);
        q = {a, b, Point{b.x + d.x - a.x, b.y + d.y - a.y}, d};
        break;
      }
      case 1: {  // axis-aligned rectangle
        Rational x = random_rational(rng), y = random_rational(rng);
        Rational w = random_rational(rng), h = random_rational(rng);
        if (w == 0 || h == 0) continue;
        q = {Point{x, y}, Point{x + w, y}, Point{x + w, y + h}, Point{x, y + h}};
        break;
      }
      case 2: {  // kite-ish: mirror two points across the x-axis
        Point a = random_point(rng), b = random_point(rng);
        q = {a, b, Point{a.x, -a.y}, Point{b.x, -b.y}};
        break;
      }
      case 3: {  // three collinear plus one off
        Rational x0 = random_rational(rng), step = random_rational(rng);
        if (step == 0) continue;
        Rational y = random_rational(rng);
        q = {Point{x0, y}, Point{x0 + step, y}, Point{x0 + 2 * step, y},
             random_point(rng)};
        break;
      }
      case 4: {  // point inside a triangle (centroid)
        Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        q = {a, b, c,
             Point{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3}};
        break;
      }
      default:
        q = {random_point(rng), random_point(rng), random_point(rng),
             random_point(rng)};
        break;
    }
    if (valid_quad(q)) return q;
  }
}

CheckResult check(std::string name, bool pass, std::string detail = "") {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

size_t count_points(std::vector<Point> pts) { return distinct_triangles(pts).count(); }

}  // namespace

std::vector<CheckResult> verify_lemma(std::uint64_t seed, int trials) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  int bound_failures = 0, classify_failures = 0;
  for (int t = 0; t < trials; ++t) {
    std::array<Point, 4> q = random_quad(rng);
    try {
      QuadCase c = classify_quad(q);
      int bound = case_bound(c).min_distinct_triangles;
      size_t actual = distinct_triangles(q).count();
      if ((int)actual < bound) ++bound_failures;
    } catch (const std::exception&) {
      ++classify_failures;
    }
  }
  {
    std::ostringstream d;
    d << trials << " quadruples, " << classify_failures << " classification errors";
    out.push_back(check("lemma.classification_total", classify_failures == 0, d.str()));
  }
  {
    std::ostringstream d;
    d << bound_failures << " bound violations";
    out.push_back(check("lemma.bounds_respected", bound_failures == 0, d.str()));
  }

  // Tightness witnesses.
  std::vector<Point> rect = {{Rational(0), Rational(0)}, {Rational(3), Rational(0)},
                             {Rational(3), Rational(1)}, {Rational(0), Rational(1)}};
  std::vector<Point> para = {{Rational(0), Rational(0)}, {Rational(3), Rational(0)},
                             {Rational(4), Rational(2)}, {Rational(1), Rational(2)}};
  std::vector<Point> square = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                               {Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  std::vector<Point> rhombus = {{Rational(0), Rational(0)}, {Rational(5), Rational(0)},
                                {Rational(8), Rational(4)}, {Rational(3), Rational(4)}};
  std::vector<Point> kite = {{Rational(0), Rational(0)}, {Rational(2), Rational(0)},
                             {Rational(3), Rational(3)}, {Rational(0), Rational(2)}};
  std::vector<Point> trap = {{Rational(0), Rational(0)}, {Rational(4), Rational(0)},
                             {Rational(3), Rational(2)}, {Rational(1), Rational(2)}};
  out.push_back(check("lemma.rectangle_is_1", count_points(rect) == 1));
  out.push_back(check("lemma.parallelogram_is_2", count_points(para) == 2));
  out.push_back(check("lemma.square_is_1", count_points(square) == 1));
  out.push_back(check("lemma.rhombus_is_2", count_points(rhombus) == 2));
  out.push_back(check("lemma.kite_is_3", count_points(kite) == 3));
  out.push_back(check("lemma.isosceles_trapezoid_is_2", count_points(trap) == 2));
  return out;
}

std::vector<CheckResult> verify_theorem1() {
  std::vector<CheckResult> out;

  std::vector<Point> square = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                               {Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  out.push_back(check("theorem1.square_count_1", distinct_triangles(square).count() == 1));

  // 100 random non-rectangle parallelograms all count exactly 2.
  std::mt19937_64 rng(20260823);
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    for (;;) {
      Point a = random_point(rng), b = random_point(rng), d = random_point(rng);
      if (collinear(a, b, d)) continue;
      Point c{b.x + d.x - a.x, b.y + d.y - a.y};
      // Skip rectangles: diagonals equal.
      if (squared_distance(a, c) == squared_distance(b, d)) continue;
      std::vector<Point> para = {a, b, c, d};
      if (distinct_triangles(para).count() != 2) ++bad;
      break;
    }
  }
  out.push_back(check("theorem1.nonrect_parallelograms_count_2", bad == 0,
                      std::to_string(bad) + " failures of 100"));

  auto pentagon = distinct_triangles_circle(regular_ngon(5));
  out.push_back(check("theorem1.pentagon_count_2", pentagon.count() == 2));

  CircleConfig sq_center = regular_ngon(4);
  sq_center.with_center = true;
  size_t circ = distinct_triangles_circle(sq_center).count();
  std::vector<Point> sqc = {{Rational(0), Rational(0)}, {Rational(2), Rational(0)},
                            {Rational(2), Rational(2)}, {Rational(0), Rational(2)},
                            {Rational(1), Rational(1)}};
  size_t rat = distinct_triangles(sqc).count();
  out.push_back(check("theorem1.square_center_count_2", circ == 2 && rat == 2));
  out.push_back(check("theorem1.square_center_representations_agree", circ == rat));

  GroundSet grid5 = GroundSet::rational_grid(5);
  out.push_back(check("theorem1.grid5_no_5_subset_with_1_class",
                      !exists_with_exactly(grid5, 5, 1)));

  FTableRow f1 = max_points_with_exactly(grid5, 1);
  bool rect_witness = false;
  if (f1.max_n == 4) {
    std::array<Point, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = grid5.grid_points()[f1.witness[i]];
    QuadCase c = classify_quad(w);
    rect_witness = (c.tag == QuadTag::Parallelogram && c.is_rectangle) ||
                   (c.tag == QuadTag::Rhombus && c.is_square);
  }
  out.push_back(check("theorem1.F1_is_4_with_rectangle_witness",
                      f1.max_n == 4 && rect_witness,
                      "max_n=" + std::to_string(f1.max_n)));

  GroundSet circ20 = GroundSet::circle_divisions(20, true);
  SearchResult six = min_triangles(circ20, 6);
  out.push_back(check("theorem1.circle20_center_6_points_need_3", six.best_count >= 3,
                      "min=" + std::to_string(six.best_count)));

  FTableRow f2 = max_points_with_exactly(circ20, 2);
  out.push_back(check("theorem1.F2_is_5_over_circle20_center", f2.max_n == 5,
                      "max_n=" + std::to_string(f2.max_n)));
  return out;
}

std::vector<CheckResult> verify_theorem2() {
  std::vector<CheckResult> out;

  bool enum_ok = true;
  std::uint64_t first_bad = 0;
  for (std::uint64_t n = 3; n <= 120; ++n) {
    auto circle = distinct_triangles_circle(regular_ngon((unsigned)n));
    if (circle.count() != partitions3_count(n)) {
      enum_ok = false;
      first_bad = n;
      break;
    }
  }
  out.push_back(check("theorem2.ngon_classes_equal_p3_up_to_120", enum_ok,
                      enum_ok ? "" : "first failure n=" + std::to_string(first_bad)));

  bool round_ok = true, gap_ok = true;
  for (std::uint64_t n = 3; n <= 2000; ++n) {
    std::uint64_t p = partitions3_count(n);
    if (p != nearest_integer_n2_over_12(n)) {
      round_ok = false;
      first_bad = n;
      break;
    }
    // |p - n^2/12| <= 3/4  <=>  |12p - n^2| <= 9.
    long long diff = (long long)(12 * p) - (long long)(n * n);
    if (diff < -9 || diff > 9) {
      gap_ok = false;
      first_bad = n;
      break;
    }
  }
  out.push_back(check("theorem2.p3_equals_round_n2_over_12_up_to_2000", round_ok));
  out.push_back(check("theorem2.gap_bound_three_quarters", gap_ok));
  return out;
}

std::vector<CheckResult> verify_conjectures() {
  std::vector<CheckResult> out;

  std::vector<GroundSet> seven_grounds;
  seven_grounds.push_back(GroundSet::circle_divisions(14));
  seven_grounds.push_back(GroundSet::eisenstein_ball(2));
  seven_grounds.push_back(GroundSet::rational_grid(3));
  EvidenceReport seven = seven_points_evidence(seven_grounds);
  for (const auto& row : seven.rows) {
    std::ostringstream d;
    d << "min=" << row.min_found << " over " << row.ground
      << (row.exhaustive ? " (exhaustive over this ground set)" : " (truncated)");
    out.push_back(check("conjecture1.seven_points." + row.ground, row.ok, d.str()));
  }

  for (int n = 4; n <= 8; ++n) {
    std::vector<GroundSet> grounds;
    grounds.push_back(GroundSet::circle_divisions(2 * n));
    grounds.push_back(GroundSet::eisenstein_ball(3));
    std::vector<int> sizes = {n};
    EvidenceReport rep = regular_polygon_evidence(grounds, sizes);
    for (const auto& row : rep.rows) {
      std::ostringstream d;
      d << "min=" << row.min_found << " threshold=" << row.threshold << " over "
        << row.ground;
      out.push_back(check("conjecture2.n" + std::to_string(n) + "." + row.ground,
                          row.ok, d.str()));
    }
    // n divides 2n, so the regular n-gon embeds: the bound must be attained.
    SearchResult r = min_triangles(grounds[0], n);
    out.push_back(check("conjecture2.ngon_attains_minimum.n" + std::to_string(n),
                        r.best_count == ngon_triangle_count((std::uint64_t)n),
                        "min=" + std::to_string(r.best_count)));
  }
  return out;
}

}  // namespace trigeo
