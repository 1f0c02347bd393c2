#include "doctest.h"

#include "trigeo/circle.hpp"

#include <random>
#include <set>

#include "test_util.hpp"
#include "trigeo/congruence.hpp"

using namespace trigeo;
using testutil::pt;

TEST_SUITE_BEGIN("circle");

TEST_CASE("chord_class canonical gaps") {
  CHECK(chord_class(Rational(0), Rational(1, 2)) == Rational(1, 2));
  CHECK(chord_class(Rational(0), Rational(5, 6)) == Rational(1, 6));
  CHECK(chord_class(Rational(1, 5), Rational(3, 5)) == Rational(2, 5));
  CHECK(chord_class(Rational(3, 5), Rational(1, 5)) == Rational(2, 5));
  CHECK(center_chord_class() == Rational(1, 6));
  CHECK_THROWS((void)chord_class(Rational(1, 3), Rational(1, 3)));
}

TEST_CASE("reference configurations on the circle") {
  CHECK(distinct_triangles_circle(regular_ngon(5)).count() == 2);
  CHECK(distinct_triangles_circle(regular_ngon(6)).count() == 3);

  CircleConfig sq_center = regular_ngon(4);
  sq_center.with_center = true;
  CHECK(distinct_triangles_circle(sq_center).count() == 2);
}

TEST_CASE("regular_ngon fractions") {
  CircleConfig tri = regular_ngon(3);
  CHECK(tri.fractions == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(2, 3)});
  CHECK_FALSE(tri.with_center);
  CircleConfig sq = regular_ngon(4);
  CHECK(sq.fractions == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2),
                                              Rational(3, 4)});
  CHECK(regular_ngon(9).fractions.size() == 9);
  CHECK_THROWS((void)regular_ngon(2));
}

TEST_CASE("center with antipodal pair is collinear and skipped") {
  // Diameter endpoints plus the center determine no triangle; a third circle
  // point is needed.
  CircleConfig cfg;
  cfg.fractions = {Rational(0), Rational(1, 2)};
  cfg.with_center = true;
  CHECK(distinct_triangles_circle(cfg).count() == 0);
}

TEST_CASE("partitions3 enumeration") {
  auto p3 = partitions3(3);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].parts == std::array<std::uint64_t, 3>{1, 1, 1});

  auto p6 = partitions3(6);
  REQUIRE(p6.size() == 3);
  CHECK(p6[0].parts == std::array<std::uint64_t, 3>{2, 2, 2});
  CHECK(p6[1].parts == std::array<std::uint64_t, 3>{3, 2, 1});
  CHECK(p6[2].parts == std::array<std::uint64_t, 3>{4, 1, 1});

  auto p9 = partitions3(9);
  CHECK(p9.size() == 7);
  bool has432 = false, has621 = false;
  for (const auto& p : p9) {
    has432 |= p.parts == std::array<std::uint64_t, 3>{4, 3, 2};
    has621 |= p.parts == std::array<std::uint64_t, 3>{6, 2, 1};
  }
  CHECK(has432);
  CHECK(has621);

  CHECK_THROWS((void)partitions3(2));
}

TEST_CASE("partitions3 invariants: order, positivity, sum") {
  for (std::uint64_t n = 3; n <= 40; ++n) {
    auto ps = partitions3(n);
    CHECK(ps.size() == partitions3_count(n));
    for (size_t i = 0; i < ps.size(); ++i) {
      auto [a, b, c] = std::tuple{ps[i].parts[0], ps[i].parts[1], ps[i].parts[2]};
      CHECK(a >= b);
      CHECK(b >= c);
      CHECK(c >= 1);
      CHECK(a + b + c == n);
      if (i > 0) CHECK(ps[i - 1].parts < ps[i].parts);
    }
  }
}

TEST_CASE("ngon counts and the nearest-integer formula") {
  CHECK(ngon_triangle_count(4) == 1);
  CHECK(ngon_triangle_count(6) == 3);
  CHECK(ngon_triangle_count(12) == 12);
  CHECK(nearest_integer_n2_over_12(3) == 1);
  CHECK(nearest_integer_n2_over_12(6) == 3);
  CHECK(nearest_integer_n2_over_12(9) == 7);
  for (std::uint64_t n = 3; n <= 300; ++n)
    CHECK(ngon_triangle_count(n) == nearest_integer_n2_over_12(n));
}

TEST_CASE("rotation and reflection of fractions preserve the class set size") {
  std::mt19937_64 rng(401);
  for (int t = 0; t < 100; ++t) {
    CircleConfig cfg;
    std::set<Rational> fr;
    int m = 3 + (int)(rng() % 5);
    while ((int)fr.size() < m) {
      Rational f((long)(rng() % 24), 24);
      fr.insert(f);
    }
    cfg.fractions.assign(fr.begin(), fr.end());
    cfg.with_center = (rng() & 1) != 0;
    if (cfg.total_points() < 3) continue;
    size_t base = distinct_triangles_circle(cfg).count();

    Rational delta((long)(rng() % 24), 24);
    CircleConfig rot = cfg;
    for (auto& f : rot.fractions) {
      f += delta;
      if (f >= 1) f -= 1;
    }
    std::sort(rot.fractions.begin(), rot.fractions.end());
    CHECK(distinct_triangles_circle(rot).count() == base);

    CircleConfig refl = cfg;
    for (auto& f : refl.fractions)
      if (f != 0) f = 1 - f;
    std::sort(refl.fractions.begin(), refl.fractions.end());
    CHECK(distinct_triangles_circle(refl).count() == base);
  }
}

TEST_CASE("every class of the regular n-gon has a member at fraction 0") {
  for (unsigned n = 3; n <= 24; ++n) {
    CircleConfig cfg = regular_ngon(n);
    auto full = distinct_triangles_circle(cfg);
    // Independent enumeration restricted to triples containing vertex 0.
    std::set<std::array<Rational, 3>> at_zero;
    for (size_t i = 1; i < cfg.fractions.size(); ++i)
      for (size_t j = i + 1; j < cfg.fractions.size(); ++j) {
        std::array<Rational, 3> sig = {
            chord_class(Rational(0), cfg.fractions[i]),
            chord_class(Rational(0), cfg.fractions[j]),
            chord_class(cfg.fractions[i], cfg.fractions[j])};
        std::sort(sig.begin(), sig.end());
        at_zero.insert(sig);
      }
    CHECK(at_zero == full.classes);
  }
}

TEST_CASE("cross-representation agreement for rational-coordinate configs") {
  CircleConfig sq = regular_ngon(4);
  std::vector<Point> sq_pts = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  CHECK(distinct_triangles_circle(sq).count() == distinct_triangles(sq_pts).count());

  CircleConfig sqc = regular_ngon(4);
  sqc.with_center = true;
  std::vector<Point> sqc_pts = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)};
  CHECK(distinct_triangles_circle(sqc).count() == distinct_triangles(sqc_pts).count());
}

TEST_SUITE_END();
