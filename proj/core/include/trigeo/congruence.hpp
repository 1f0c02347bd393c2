#pragma once

// Triangle congruence classes and whole-configuration congruence testing.
// Two noncollinear triples are congruent iff their sorted triples of exact
// squared side lengths coincide (SSS).

#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "trigeo/geometry.hpp"

namespace trigeo {

// Sorted non-decreasing triple of squared side lengths; one congruence class.
struct TriangleSignature {
  std::array<Rational, 3> sides;

  friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;
  friend bool operator<(const TriangleSignature& a, const TriangleSignature& b) {
    return a.sides < b.sides;
  }
};

struct TriangleClassSet {
  std::set<TriangleSignature> classes;
  size_t count() const { return classes.size(); }
};

// Returns the signature of the triangle abc, or nullopt when the points are
// collinear. Throws on duplicate points.
std::optional<TriangleSignature> triangle_signature(const Point& a, const Point& b,
                                                   const Point& c);

// All congruence classes of noncollinear triples of P. Requires |P| >= 3 and
// distinct points.
TriangleClassSet distinct_triangles(std::span<const Point> points);

// Rational orthogonal map plus translation. Rotation entries built from a
// Pythagorean parametrization stay exactly orthonormal.
struct RationalIsometry {
  // Row-major 2x2 matrix.
  std::array<Rational, 4> m{1, 0, 0, 1};
  Rational tx = 0;
  Rational ty = 0;

  Point operator()(const Point& p) const {
    return Point{m[0] * p.x + m[1] * p.y + tx, m[2] * p.x + m[3] * p.y + ty};
  }

  // Rotation with cos = (p^2-q^2)/(p^2+q^2), sin = 2pq/(p^2+q^2).
  static RationalIsometry pythagorean_rotation(const BigInt& p, const BigInt& q);
  static RationalIsometry translation(Rational dx, Rational dy);
  static RationalIsometry reflection_x();

  RationalIsometry then(const RationalIsometry& next) const;
};

std::vector<Point> apply_isometry(std::span<const Point> points,
                                  const RationalIsometry& iso);

// True iff some isometry (rotation/reflection + translation) maps P onto Q.
bool configurations_congruent(std::span<const Point> p, std::span<const Point> q);

}  // namespace trigeo
