#include "trigeo/circle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trigeo {

Rational chord_class(const Rational& f1, const Rational& f2) {
  if (f1 == f2) throw std::invalid_argument("equal fractions have no chord");
  Rational d = f2 - f1;
  if (d < 0) d = -d;
  // d in (0,1); fold to the canonical gap.
  Rational g = std::min(d, Rational(1) - d);
  return g;
}

CircleClassSet distinct_triangles_circle(const CircleConfig& cfg) {
  if (cfg.total_points() < 3) throw std::invalid_argument("need at least 3 points");
  const auto& f = cfg.fractions;
  const size_t n = f.size();
  for (size_t i = 0; i + 1 < n; ++i)
    if (f[i] == f[i + 1]) throw std::invalid_argument("duplicate fractions");

  // Intern pairwise gaps so triples are cheap integer triples.
  std::map<Rational, int> gap_ids;
  auto intern = [&](const Rational& g) {
    auto [it, _] = gap_ids.emplace(g, (int)gap_ids.size());
    return it->second;
  };
  std::vector<std::vector<int>> pair_gap(n, std::vector<int>(n, -1));
  // Center + antipodal pair is collinear and contributes no triangle.
  std::vector<std::vector<bool>> antipodal(n, std::vector<bool>(n, false));
  const Rational half(1, 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Rational g = chord_class(f[i], f[j]);
      pair_gap[i][j] = pair_gap[j][i] = intern(g);
      antipodal[i][j] = antipodal[j][i] = (g == half);
    }
  int center_id = cfg.with_center ? intern(center_chord_class()) : -1;

  std::set<std::array<int, 3>> seen;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        std::array<int, 3> t{pair_gap[i][j], pair_gap[i][k], pair_gap[j][k]};
        std::sort(t.begin(), t.end());
        seen.insert(t);
      }
      if (cfg.with_center && !antipodal[i][j]) {
        std::array<int, 3> t{center_id, center_id, pair_gap[i][j]};
        std::sort(t.begin(), t.end());
        seen.insert(t);
      }
    }

  // Rebuild signatures in gap-fraction terms.
  std::vector<Rational> by_id(gap_ids.size());
  for (const auto& [g, id] : gap_ids) by_id[id] = g;
  CircleClassSet out;
  for (const auto& t : seen)
    out.classes.insert({by_id[t[0]], by_id[t[1]], by_id[t[2]]});
  return out;
}

CircleConfig regular_ngon(unsigned n) {
  if (n < 3) throw std::invalid_argument("n-gon needs n >= 3");
  CircleConfig cfg;
  cfg.fractions.reserve(n);
  for (unsigned k = 0; k < n; ++k) cfg.fractions.emplace_back(k, n);
  return cfg;
}

std::vector<Partition3> partitions3(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("partitions3 needs n >= 3");
  std::vector<Partition3> out;
  for (std::uint64_t a = (n + 2) / 3; a <= n - 2; ++a) {
    // b in [ceil((n-a)/2), min(a, n-a-1)], c = n-a-b.
    std::uint64_t rest = n - a;
    std::uint64_t blo = (rest + 1) / 2;
    std::uint64_t bhi = std::min<std::uint64_t>(a, rest - 1);
    for (std::uint64_t b = blo; b <= bhi; ++b)
      out.push_back(Partition3{{a, b, rest - b}});
  }
  return out;
}

std::uint64_t partitions3_count(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("partitions3 needs n >= 3");
  std::uint64_t count = 0;
  for (std::uint64_t a = (n + 2) / 3; a <= n - 2; ++a) {
    std::uint64_t rest = n - a;
    std::uint64_t blo = (rest + 1) / 2;
    std::uint64_t bhi = std::min<std::uint64_t>(a, rest - 1);
    if (bhi >= blo) count += bhi - blo + 1;
  }
  return count;
}

std::uint64_t ngon_triangle_count(std::uint64_t n) { return partitions3_count(n); }

std::uint64_t nearest_integer_n2_over_12(std::uint64_t n) {
  return (n * n + 6) / 12;
}

}  // namespace trigeo
