#pragma once

// Exact triangle counting for points on a common unit circle (optionally with
// the center), regular n-gons, and partitions of n into three positive parts.
//
// A circle point is a turn-fraction in [0,1) (angle / 2*pi). Two chords are
// congruent iff their canonical gap fractions g = min(d, 1-d) agree, because
// the chord length 2*sin(pi*g) is strictly increasing on (0, 1/2]. The
// center-to-circle distance equals the chord with g = 1/6.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "trigeo/rational.hpp"

namespace trigeo {

struct CircleConfig {
  std::vector<Rational> fractions;  // distinct, each in [0,1), kept sorted
  bool with_center = false;

  size_t total_points() const { return fractions.size() + (with_center ? 1 : 0); }
};

// Canonical gap fraction g in (0, 1/2]. Throws on equal fractions.
Rational chord_class(const Rational& f1, const Rational& f2);

// Gap fraction of the radius: 2*sin(pi/6) = 1.
inline Rational center_chord_class() { return Rational(1, 6); }

struct CircleClassSet {
  // Sorted triples of gap fractions, one per congruence class.
  std::set<std::array<Rational, 3>> classes;
  size_t count() const { return classes.size(); }
};

// Enumerates all noncollinear triples. A triple of circle points is never
// collinear; {center, f1, f2} is collinear exactly when f1 and f2 are
// antipodal. Throws when fewer than 3 points are given.
CircleClassSet distinct_triangles_circle(const CircleConfig& cfg);

// Fractions {k/n : 0 <= k < n}, no center.
CircleConfig regular_ngon(unsigned n);

struct Partition3 {
  // a >= b >= c >= 1, a + b + c = n.
  std::array<std::uint64_t, 3> parts;

  friend bool operator==(const Partition3&, const Partition3&) = default;
};

// All partitions of n into exactly three positive parts, lexicographically
// ordered by (a, b). Throws for n < 3.
std::vector<Partition3> partitions3(std::uint64_t n);

// |partitions3(n)|, computed by direct range counting (no closed form).
std::uint64_t partitions3_count(std::uint64_t n);

// Triangle classes of the regular n-gon via the partition bijection.
std::uint64_t ngon_triangle_count(std::uint64_t n);

// round(n^2/12); the fractional part is never 1/2 since n^2 mod 12 is in
// {0,1,4,9}.
std::uint64_t nearest_integer_n2_over_12(std::uint64_t n);

}  // namespace trigeo
