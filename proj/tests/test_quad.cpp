#include "doctest.h"

#include "trigeo/quad.hpp"

#include <random>

#include "test_util.hpp"
#include "trigeo/congruence.hpp"

using namespace trigeo;
using testutil::pt;

namespace {

QuadCase classify(std::array<Point, 4> q) { return classify_quad(q); }

int count4(std::array<Point, 4> q) {
  return (int)distinct_triangles(std::vector<Point>(q.begin(), q.end())).count();
}

}  // namespace

TEST_SUITE_BEGIN("quad");

TEST_CASE("classification of named shapes") {
  CHECK(classify({pt(0, 0), pt(4, 0), pt(2, 3), pt(2, 1)}).tag == QuadTag::NotConvex);
  CHECK(classify({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)}).tag ==
        QuadTag::ThreeCollinear);

  QuadCase sq = classify({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  CHECK(sq.tag == QuadTag::Rhombus);
  CHECK(sq.is_square);

  QuadCase rh = classify({pt(0, 0), pt(5, 0), pt(8, 4), pt(3, 4)});
  CHECK(rh.tag == QuadTag::Rhombus);
  CHECK_FALSE(rh.is_square);

  CHECK(classify({pt(0, 0), pt(2, 0), pt(3, 3), pt(0, 2)}).tag == QuadTag::Kite);

  QuadCase para = classify({pt(0, 0), pt(3, 0), pt(4, 2), pt(1, 2)});
  CHECK(para.tag == QuadTag::Parallelogram);
  CHECK_FALSE(para.is_rectangle);

  QuadCase rect = classify({pt(0, 0), pt(3, 0), pt(3, 1), pt(0, 1)});
  CHECK(rect.tag == QuadTag::Parallelogram);
  CHECK(rect.is_rectangle);

  // Vertex order must not matter: same square, scrambled.
  QuadCase scrambled = classify({pt(1, 1), pt(0, 0), pt(0, 1), pt(1, 0)});
  CHECK(scrambled.tag == QuadTag::Rhombus);
  CHECK(scrambled.is_square);
}

TEST_CASE("one congruent pair: adjacent vs opposite, trapezoid refinement") {
  // Sides 4, 4, 9, 5 in cyclic order: exactly one congruent pair, adjacent.
  QuadCase adj = classify({pt(0, 0), pt(2, 0), pt(2, 2), pt(-1, 2)});
  CHECK(adj.tag == QuadTag::OnePairAdjacent);

  // Legs congruent, diagonals equal: isosceles trapezoid, two classes only.
  QuadCase trap = classify({pt(0, 0), pt(4, 0), pt(3, 2), pt(1, 2)});
  CHECK(trap.tag == QuadTag::OnePairOpposite);
  CHECK(trap.is_isosceles_trapezoid);
  CHECK(case_bound(trap).min_distinct_triangles == 2);
  CHECK(count4({pt(0, 0), pt(4, 0), pt(3, 2), pt(1, 2)}) == 2);

  // Sides 25, 10, 85, 10 with diagonals 45 and 65: opposite congruent pair,
  // unequal diagonals, so the bound of three stands (and is met).
  QuadCase opp = classify({pt(0, 0), pt(5, 0), pt(6, 3), pt(-3, 1)});
  CHECK(opp.tag == QuadTag::OnePairOpposite);
  CHECK_FALSE(opp.is_isosceles_trapezoid);
  CHECK(case_bound(opp).min_distinct_triangles == 3);
  CHECK(count4({pt(0, 0), pt(5, 0), pt(6, 3), pt(-3, 1)}) >= 3);
}

TEST_CASE("case bounds table") {
  CHECK(case_bound(QuadCase{QuadTag::AllSidesDistinct}).min_distinct_triangles == 3);
  CHECK(case_bound(QuadCase{QuadTag::OnePairAdjacent}).min_distinct_triangles == 3);
  CHECK(case_bound(QuadCase{QuadTag::OnePairOpposite}).min_distinct_triangles == 3);
  CHECK(case_bound(QuadCase{QuadTag::Kite}).min_distinct_triangles == 3);
  CHECK(case_bound(QuadCase{QuadTag::NotConvex}).min_distinct_triangles == 2);
  CHECK(case_bound(QuadCase{QuadTag::ThreeCollinear}).min_distinct_triangles == 2);
  CHECK(case_bound(QuadCase{QuadTag::ThreeSidesCongruent}).min_distinct_triangles == 2);
  QuadCase rect{QuadTag::Parallelogram};
  rect.is_rectangle = true;
  CHECK(case_bound(rect).min_distinct_triangles == 1);
  CHECK(case_bound(QuadCase{QuadTag::Parallelogram}).min_distinct_triangles == 2);
  QuadCase square{QuadTag::Rhombus};
  square.is_square = true;
  CHECK(case_bound(square).min_distinct_triangles == 1);
  CHECK(case_bound(QuadCase{QuadTag::Rhombus}).min_distinct_triangles == 2);
}

TEST_CASE("tightness: each bound is attained") {
  CHECK(count4({pt(0, 0), pt(3, 0), pt(3, 1), pt(0, 1)}) == 1);   // rectangle
  CHECK(count4({pt(0, 0), pt(3, 0), pt(4, 2), pt(1, 2)}) == 2);   // parallelogram
  CHECK(count4({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}) == 1);   // square
  CHECK(count4({pt(0, 0), pt(5, 0), pt(8, 4), pt(3, 4)}) == 2);   // rhombus
  CHECK(count4({pt(0, 0), pt(2, 0), pt(3, 3), pt(0, 2)}) == 3);   // kite
  CHECK(count4({pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)}) == 3);   // three collinear
}

TEST_CASE("errors: duplicates and four collinear") {
  CHECK_THROWS_AS((void)classify({pt(0, 0), pt(0, 0), pt(1, 0), pt(0, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)classify({pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)}),
                  std::invalid_argument);
}

TEST_CASE("fuzz: single tag, sound bound, isometry/scaling invariant") {
  std::mt19937_64 rng(301);
  int done = 0;
  while (done < 400) {
    std::array<Point, 4> q = {testutil::random_point(rng), testutil::random_point(rng),
                              testutil::random_point(rng), testutil::random_point(rng)};
    bool valid = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) valid &= !(q[i] == q[j]);
    if (!valid) continue;
    bool all_line = collinear(q[0], q[1], q[2]) && collinear(q[0], q[1], q[3]);
    if (all_line) continue;
    ++done;

    QuadCase c = classify_quad(q);
    CHECK(count4(q) >= case_bound(c).min_distinct_triangles);

    auto iso = testutil::random_isometry(rng);
    std::array<Point, 4> qi = {iso(q[0]), iso(q[1]), iso(q[2]), iso(q[3])};
    CHECK(classify_quad(qi) == c);

    Rational s(1 + (int)(rng() % 5), 1 + (int)(rng() % 3));
    std::array<Point, 4> qs;
    for (int i = 0; i < 4; ++i) qs[i] = Point{s * q[i].x, s * q[i].y};
    CHECK(classify_quad(qs) == c);
  }
}

TEST_SUITE_END();
