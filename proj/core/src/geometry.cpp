#include "trigeo/geometry.hpp"

#include <algorithm>

namespace trigeo {

QLength squared_distance(const Point& p, const Point& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return QLength{dx * dx + dy * dy};
}

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, c) == 0;
}

void require_distinct(std::span<const Point> pts) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("duplicate points");
}

namespace {

// True if q lies strictly between a and b on their common line.
bool strictly_between(const Point& a, const Point& b, const Point& q) {
  if (a.x != b.x) return (a.x < q.x && q.x < b.x) || (b.x < q.x && q.x < a.x);
  return (a.y < q.y && q.y < b.y) || (b.y < q.y && q.y < a.y);
}

}  // namespace

ConvexReport in_convex_position(std::span<const Point, 4> pts) {
  require_distinct(pts);

  bool all_collinear = true;
  for (int i = 0; i < 4 && all_collinear; ++i) {
    int a = (i + 1) % 4, b = (i + 2) % 4, c = (i + 3) % 4;
    if (orientation(pts[a], pts[b], pts[c]) != 0) all_collinear = false;
  }
  if (all_collinear) throw std::invalid_argument("four collinear points");

  // For each point, test whether it lies inside (or on) the triangle of the
  // other three.
  for (int i = 0; i < 4; ++i) {
    int t[3], k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) t[k++] = j;
    if (orientation(pts[t[0]], pts[t[1]], pts[t[2]]) == 0) continue;
    int s0 = orientation(pts[t[0]], pts[t[1]], pts[i]);
    int s1 = orientation(pts[t[1]], pts[t[2]], pts[i]);
    int s2 = orientation(pts[t[2]], pts[t[0]], pts[i]);
    bool has_pos = s0 > 0 || s1 > 0 || s2 > 0;
    bool has_neg = s0 < 0 || s1 < 0 || s2 < 0;
    if (has_pos && has_neg) continue;  // outside the triangle
    if (s0 != 0 && s1 != 0 && s2 != 0) {
      ConvexReport r;
      r.convex = false;
      r.interior_index = i;
      return r;
    }
    // On a triangle edge: the input is convex with a degenerate hull vertex.
    // Handled below via the collinear-triple scan.
  }

  ConvexReport r;
  r.convex = true;

  // Degenerate vertex: the middle point of a collinear triple.
  for (int i = 0; i < 4 && r.degenerate_index < 0; ++i)
    for (int j = i + 1; j < 4 && r.degenerate_index < 0; ++j)
      for (int k = j + 1; k < 4; ++k) {
        if (orientation(pts[i], pts[j], pts[k]) != 0) continue;
        if (strictly_between(pts[i], pts[j], pts[k]))
          r.degenerate_index = k;
        else if (strictly_between(pts[i], pts[k], pts[j]))
          r.degenerate_index = j;
        else
          r.degenerate_index = i;
        break;
      }

  // Hull cycle: sort around the centroid (times 4, to stay rational).
  Point c{pts[0].x + pts[1].x + pts[2].x + pts[3].x,
          pts[0].y + pts[1].y + pts[2].y + pts[3].y};
  std::array<int, 4> idx{0, 1, 2, 3};
  auto half = [&](int i) {
    // 0 = upper half-plane (angle in [0, pi)), 1 = lower, relative to c/4.
    Rational dy = 4 * pts[i].y - c.y;
    Rational dx = 4 * pts[i].x - c.x;
    if (dy > 0) return 0;
    if (dy < 0) return 1;
    return dx > 0 ? 0 : 1;
  };
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    int hi = half(i), hj = half(j);
    if (hi != hj) return hi < hj;
    Rational cross = (4 * pts[i].x - c.x) * (4 * pts[j].y - c.y) -
                     (4 * pts[i].y - c.y) * (4 * pts[j].x - c.x);
    if (cross != 0) return cross > 0;
    return i < j;
  });
  r.hull_cycle = idx;
  return r;
}

}  // namespace trigeo
