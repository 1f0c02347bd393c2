#pragma once

// Exhaustive taxonomy of 4-point configurations and the minimum number of
// distinct triangles each case forces.

#include <span>
#include <string_view>

#include "trigeo/geometry.hpp"

namespace trigeo {

enum class QuadTag {
  NotConvex,
  ThreeCollinear,
  AllSidesDistinct,
  OnePairAdjacent,   // exactly one congruent pair, adjacent
  OnePairOpposite,   // exactly one congruent pair, opposite
  Kite,              // two congruent pairs, each pair adjacent
  Parallelogram,     // two congruent pairs, opposite
  ThreeSidesCongruent,
  Rhombus,           // all four sides congruent
};

std::string_view to_string(QuadTag tag);

struct QuadCase {
  QuadTag tag;
  // Valid for Parallelogram / Rhombus.
  bool is_rectangle = false;
  bool is_square = false;
  // Valid for OnePairOpposite: the congruent pair are the legs of an
  // isosceles trapezoid (equal diagonals). Such a quadrilateral determines
  // exactly two distinct triangles, not three: the diagonal splits it into
  // mirror-congruent halves twice over. Example: (0,0),(4,0),(3,2),(1,2).
  bool is_isosceles_trapezoid = false;

  friend bool operator==(const QuadCase&, const QuadCase&) = default;
};

struct CaseBound {
  QuadTag tag;
  int min_distinct_triangles;  // in {1, 2, 3}
};

// Returns the unique applicable tag. Throws on duplicates or four collinear
// points.
QuadCase classify_quad(std::span<const Point, 4> pts);

CaseBound case_bound(const QuadCase& c);

}  // namespace trigeo
