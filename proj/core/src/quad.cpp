#include "trigeo/quad.hpp"

namespace trigeo {

std::string_view to_string(QuadTag tag) {
  switch (tag) {
    case QuadTag::NotConvex: return "not-convex";
    case QuadTag::ThreeCollinear: return "three-collinear";
    case QuadTag::AllSidesDistinct: return "all-sides-distinct";
    case QuadTag::OnePairAdjacent: return "one-pair-adjacent";
    case QuadTag::OnePairOpposite: return "one-pair-opposite";
    case QuadTag::Kite: return "kite";
    case QuadTag::Parallelogram: return "parallelogram";
    case QuadTag::ThreeSidesCongruent: return "three-sides-congruent";
    case QuadTag::Rhombus: return "rhombus";
  }
  return "?";
}

QuadCase classify_quad(std::span<const Point, 4> pts) {
  ConvexReport report = in_convex_position(pts);
  if (!report.convex) return QuadCase{QuadTag::NotConvex};
  if (report.degenerate_index >= 0) return QuadCase{QuadTag::ThreeCollinear};

  // Sides of the hull quadrilateral in cyclic order.
  Rational s[4];
  Rational d[2];
  for (int i = 0; i < 4; ++i) {
    const Point& a = pts[report.hull_cycle[i]];
    const Point& b = pts[report.hull_cycle[(i + 1) % 4]];
    s[i] = squared_distance(a, b).value;
  }
  d[0] = squared_distance(pts[report.hull_cycle[0]], pts[report.hull_cycle[2]]).value;
  d[1] = squared_distance(pts[report.hull_cycle[1]], pts[report.hull_cycle[3]]).value;
  bool diagonals_equal = d[0] == d[1];

  // Count pairwise side equalities (six pairs).
  bool eq01 = s[0] == s[1], eq12 = s[1] == s[2], eq23 = s[2] == s[3], eq30 = s[3] == s[0];
  bool eq02 = s[0] == s[2], eq13 = s[1] == s[3];

  if (eq01 && eq12 && eq23) {
    QuadCase c{QuadTag::Rhombus};
    c.is_square = diagonals_equal;
    c.is_rectangle = diagonals_equal;
    return c;
  }

  int equal_count = eq01 + eq12 + eq23 + eq30 + eq02 + eq13;
  if (equal_count == 0) return QuadCase{QuadTag::AllSidesDistinct};

  // Three congruent sides (fourth distinct): exactly three of the six
  // equalities hold, all among one triple of sides.
  if (equal_count == 3) return QuadCase{QuadTag::ThreeSidesCongruent};

  // Two distinct congruent pairs.
  if ((eq01 && eq23) || (eq12 && eq30)) return QuadCase{QuadTag::Kite};
  if (eq02 && eq13) {
    QuadCase c{QuadTag::Parallelogram};
    c.is_rectangle = diagonals_equal;
    return c;
  }

  // Exactly one congruent pair.
  if (eq02 || eq13) {
    QuadCase c{QuadTag::OnePairOpposite};
    // Equal diagonals force an isosceles trapezoid whose legs are the
    // congruent pair; the four triangles then collapse into two mirror
    // classes, so the usual lower bound of three does not apply.
    c.is_isosceles_trapezoid = diagonals_equal;
    return c;
  }
  return QuadCase{QuadTag::OnePairAdjacent};
}

CaseBound case_bound(const QuadCase& c) {
  switch (c.tag) {
    case QuadTag::AllSidesDistinct:
    case QuadTag::OnePairAdjacent:
    case QuadTag::Kite:
      return {c.tag, 3};
    case QuadTag::OnePairOpposite:
      return {c.tag, c.is_isosceles_trapezoid ? 2 : 3};
    case QuadTag::NotConvex:
    case QuadTag::ThreeCollinear:
    case QuadTag::ThreeSidesCongruent:
      return {c.tag, 2};
    case QuadTag::Parallelogram:
      return {c.tag, c.is_rectangle ? 1 : 2};
    case QuadTag::Rhombus:
      return {c.tag, c.is_square ? 1 : 2};
  }
  throw std::logic_error("unreachable");
}

}  // namespace trigeo
