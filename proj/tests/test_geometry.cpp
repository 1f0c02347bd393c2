#include "doctest.h"

#include "trigeo/geometry.hpp"

#include <array>

#include "test_util.hpp"

using namespace trigeo;
using testutil::pt;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("squared_distance on known segments") {
  CHECK(squared_distance(pt(0, 0), pt(1, 0)).value == 1);
  CHECK(squared_distance(pt(0, 0), Point{Rational(1, 2), Rational(1, 2)}).value ==
        Rational(1, 2));
  CHECK(squared_distance(pt(1, 2), pt(4, 6)).value == 25);
  CHECK(squared_distance(pt(3, -7), pt(3, -7)).value == 0);
}

TEST_CASE("squared_distance is symmetric and scales quadratically") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    Point p = testutil::random_point(rng), q = testutil::random_point(rng);
    CHECK(squared_distance(p, q) == squared_distance(q, p));
    Rational s = testutil::random_rational(rng);
    if (s <= 0) continue;
    Point sp{s * p.x, s * p.y}, sq{s * q.x, s * q.y};
    CHECK(squared_distance(sp, sq).value == s * s * squared_distance(p, q).value);
  }
}

TEST_CASE("orientation signs") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orientation antisymmetry and reflection") {
  std::mt19937_64 rng(102);
  for (int t = 0; t < 300; ++t) {
    Point a = testutil::random_point(rng), b = testutil::random_point(rng),
          c = testutil::random_point(rng);
    CHECK(orientation(a, b, c) == -orientation(a, c, b));
    auto flip = [](const Point& p) { return Point{p.x, -p.y}; };
    CHECK(orientation(flip(a), flip(b), flip(c)) == -orientation(a, b, c));
    Rational dx = testutil::random_rational(rng), dy = testutil::random_rational(rng);
    auto shift = [&](const Point& p) { return Point{p.x + dx, p.y + dy}; };
    CHECK(orientation(shift(a), shift(b), shift(c)) == orientation(a, b, c));
  }
}

TEST_CASE("convex position: square") {
  std::array<Point, 4> sq = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  ConvexReport r = in_convex_position(sq);
  CHECK(r.convex);
  CHECK(r.degenerate_index == -1);
  // Cyclic hull order starting anywhere; the input is already a cycle.
  int start = r.hull_cycle[0];
  for (int i = 1; i < 4; ++i) CHECK(r.hull_cycle[i] == (start + i) % 4);
}

TEST_CASE("convex position: interior point detected") {
  std::array<Point, 4> q = {pt(0, 0), pt(4, 0), pt(2, 3), pt(2, 1)};
  ConvexReport r = in_convex_position(q);
  CHECK_FALSE(r.convex);
  CHECK(r.interior_index == 3);
}

TEST_CASE("convex position: three collinear flagged, middle point degenerate") {
  std::array<Point, 4> q = {pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)};
  ConvexReport r = in_convex_position(q);
  CHECK(r.convex);
  CHECK(r.degenerate_index == 1);  // (1,0) lies between (0,0) and (2,0)
}

TEST_CASE("convex position rejects duplicates and four collinear") {
  std::array<Point, 4> dup = {pt(0, 0), pt(1, 0), pt(0, 0), pt(0, 1)};
  CHECK_THROWS_AS((void)in_convex_position(dup), std::invalid_argument);
  std::array<Point, 4> line = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)};
  CHECK_THROWS_AS((void)in_convex_position(line), std::invalid_argument);
}

TEST_SUITE_END();
