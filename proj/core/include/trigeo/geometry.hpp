#pragma once

// Exact planar kernel: rational points, squared distances, and sign-exact
// orientation / convex-position predicates. Everything here is pure and
// immutable; no floating point anywhere.

#include <array>
#include <compare>
#include <span>
#include <stdexcept>

#include "trigeo/rational.hpp"

namespace trigeo {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

// Squared length. Kept as a distinct type so lengths never mix with bare
// coordinates by accident.
struct QLength {
  Rational value;

  friend bool operator==(const QLength&, const QLength&) = default;
  friend bool operator<(const QLength& a, const QLength& b) { return a.value < b.value; }
  friend bool operator<=(const QLength& a, const QLength& b) { return a.value <= b.value; }
};

QLength squared_distance(const Point& p, const Point& q);

// Sign of (b-a) x (c-a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

bool collinear(const Point& a, const Point& b, const Point& c);

struct ConvexReport {
  bool convex = false;
  // When convex: indices into the input in cyclic hull order (counterclockwise).
  std::array<int, 4> hull_cycle{};
  // When not convex: index of the strictly interior point.
  int interior_index = -1;
  // Index of a hull vertex lying on the segment between its neighbors
  // (three collinear points, fourth off the line); -1 if none.
  int degenerate_index = -1;
};

// Classifies four distinct, not-all-collinear points. Throws
// std::invalid_argument on duplicates or four collinear points.
ConvexReport in_convex_position(std::span<const Point, 4> pts);

// Shared validation: throws on duplicate points.
void require_distinct(std::span<const Point> pts);

}  // namespace trigeo
