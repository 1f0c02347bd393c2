#include "trigeo/congruence.hpp"

#include <algorithm>

namespace trigeo {

std::optional<TriangleSignature> triangle_signature(const Point& a, const Point& b,
                                                    const Point& c) {
  const Point pts[3] = {a, b, c};
  require_distinct(pts);
  if (orientation(a, b, c) == 0) return std::nullopt;
  TriangleSignature sig{{squared_distance(a, b).value, squared_distance(a, c).value,
                         squared_distance(b, c).value}};
  std::sort(sig.sides.begin(), sig.sides.end());
  return sig;
}

TriangleClassSet distinct_triangles(std::span<const Point> points) {
  if (points.size() < 3) throw std::invalid_argument("need at least 3 points");
  require_distinct(points);
  TriangleClassSet out;
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (auto sig = triangle_signature(points[i], points[j], points[k]))
          out.classes.insert(*sig);
  return out;
}

RationalIsometry RationalIsometry::pythagorean_rotation(const BigInt& p, const BigInt& q) {
  BigInt pp = p * p, qq = q * q;
  Rational h = Rational(pp + qq);
  RationalIsometry iso;
  Rational c = Rational(pp - qq) / h;
  Rational s = Rational(2 * p * q) / h;
  iso.m = {c, -s, s, c};
  return iso;
}

RationalIsometry RationalIsometry::translation(Rational dx, Rational dy) {
  RationalIsometry iso;
  iso.tx = std::move(dx);
  iso.ty = std::move(dy);
  return iso;
}

RationalIsometry RationalIsometry::reflection_x() {
  RationalIsometry iso;
  iso.m = {1, 0, 0, -1};
  return iso;
}

RationalIsometry RationalIsometry::then(const RationalIsometry& next) const {
  RationalIsometry out;
  out.m[0] = next.m[0] * m[0] + next.m[1] * m[2];
  out.m[1] = next.m[0] * m[1] + next.m[1] * m[3];
  out.m[2] = next.m[2] * m[0] + next.m[3] * m[2];
  out.m[3] = next.m[2] * m[1] + next.m[3] * m[3];
  out.tx = next.m[0] * tx + next.m[1] * ty + next.tx;
  out.ty = next.m[2] * tx + next.m[3] * ty + next.ty;
  return out;
}

std::vector<Point> apply_isometry(std::span<const Point> points,
                                  const RationalIsometry& iso) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(iso(p));
  return out;
}

namespace {

bool same_point_set(std::span<const Point> a, std::vector<Point> b_sorted,
                    const RationalIsometry& iso) {
  for (const Point& p : a) {
    Point img = iso(p);
    if (!std::binary_search(b_sorted.begin(), b_sorted.end(), img,
                            [](const Point& x, const Point& y) { return x < y; }))
      return false;
  }
  return true;
}

}  // namespace

bool configurations_congruent(std::span<const Point> p, std::span<const Point> q) {
  if (p.size() != q.size()) throw std::invalid_argument("size mismatch");
  if (p.empty()) return true;
  if (p.size() == 1) return true;

  std::vector<Point> q_sorted(q.begin(), q.end());
  std::sort(q_sorted.begin(), q_sorted.end());

  const Point& p1 = p[0];
  const Point& p2 = p[1];
  Rational d = squared_distance(p1, p2).value;
  Rational ux = p2.x - p1.x, uy = p2.y - p1.y;

  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) {
      if (i == j) continue;
      const Point& q1 = q[i];
      const Point& q2 = q[j];
      if (squared_distance(q1, q2).value != d) continue;
      Rational vx = q2.x - q1.x, vy = q2.y - q1.y;

      // Direct: rotation with cos = u.v/d, sin = (u x v)/d.
      {
        RationalIsometry iso;
        Rational c = (ux * vx + uy * vy) / d;
        Rational s = (ux * vy - uy * vx) / d;
        iso.m = {c, -s, s, c};
        iso.tx = q1.x - (iso.m[0] * p1.x + iso.m[1] * p1.y);
        iso.ty = q1.y - (iso.m[2] * p1.x + iso.m[3] * p1.y);
        if (same_point_set(p, q_sorted, iso)) return true;
      }
      // Reflected twin: det = -1 map sending u to v.
      {
        RationalIsometry iso;
        Rational c = (ux * vx - uy * vy) / d;
        Rational s = (ux * vy + uy * vx) / d;
        iso.m = {c, s, s, -c};
        iso.tx = q1.x - (iso.m[0] * p1.x + iso.m[1] * p1.y);
        iso.ty = q1.y - (iso.m[2] * p1.x + iso.m[3] * p1.y);
        if (same_point_set(p, q_sorted, iso)) return true;
      }
    }
  return false;
}

}  // namespace trigeo
