#include "doctest.h"

#include "trigeo/search.hpp"

#include <algorithm>
#include <vector>

using namespace trigeo;

namespace {

// Unpruned reference: scan every n-subset, minimum positive class count.
std::uint64_t brute_min(const GroundSet& g, int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::uint64_t best = UINT64_MAX;
  for (;;) {
    std::uint64_t c = recount_classes(g, idx);
    if (c > 0) best = std::min(best, c);
    int i = n - 1;
    while (i >= 0 && idx[i] == g.size() - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("ground set construction") {
  GroundSet grid = GroundSet::rational_grid(3);
  CHECK(grid.size() == 9);
  CHECK(grid.grid_points()[0] == Point{Rational(0), Rational(0)});
  CHECK(grid.grid_points()[8] == Point{Rational(2), Rational(2)});

  GroundSet circle = GroundSet::circle_divisions(5);
  CHECK(circle.size() == 5);
  CHECK(circle.circle_fractions() ==
        std::vector<Rational>{Rational(0), Rational(1, 5), Rational(2, 5),
                              Rational(3, 5), Rational(4, 5)});

  GroundSet with_center = GroundSet::circle_divisions(4, true);
  CHECK(with_center.size() == 5);
  CHECK(with_center.center_site() == 4);

  CHECK(GroundSet::eisenstein_ball(1).size() == 7);
  CHECK(GroundSet::eisenstein_ball(2).size() == 19);
  CHECK(GroundSet::eisenstein_ball(3).size() == 37);
}

TEST_CASE("minimum search on reference grounds") {
  SearchResult hex = min_triangles(GroundSet::circle_divisions(12), 6);
  CHECK(hex.best_count == 3);
  CHECK(hex.exhaustive);
  // The regular hexagon (every other site) must appear among the witnesses,
  // up to rotation/reflection of the circle.
  GroundSet c12 = GroundSet::circle_divisions(12);
  std::vector<int> hexagon = {0, 2, 4, 6, 8, 10};
  bool found_hexagon = false;
  for (const auto& w : hex.witnesses)
    found_hexagon |= subsets_congruent(c12, w, hexagon);
  CHECK(found_hexagon);

  SearchResult sq = min_triangles(GroundSet::rational_grid(2), 4);
  CHECK(sq.best_count == 1);

  GroundSet c10 = GroundSet::circle_divisions(10);
  SearchResult pent = min_triangles(c10, 5);
  CHECK(pent.best_count == 2);
  std::vector<int> pentagon = {0, 2, 4, 6, 8};
  bool found_pentagon = false;
  for (const auto& w : pent.witnesses)
    found_pentagon |= subsets_congruent(c10, w, pentagon);
  CHECK(found_pentagon);
}

TEST_CASE("witness recount matches best_count") {
  for (const GroundSet& g : {GroundSet::rational_grid(3),
                             GroundSet::circle_divisions(12),
                             GroundSet::eisenstein_ball(2)}) {
    for (int n = 4; n <= 6; ++n) {
      SearchResult r = min_triangles(g, n);
      CHECK(!r.witnesses.empty());
      for (const auto& w : r.witnesses) CHECK(recount_classes(g, w) == r.best_count);
    }
  }
}

TEST_CASE("witnesses are pairwise non-congruent") {
  for (const GroundSet& g : {GroundSet::rational_grid(3),
                             GroundSet::circle_divisions(10),
                             GroundSet::eisenstein_ball(2)}) {
    SearchResult r = min_triangles(g, 4);
    for (size_t i = 0; i < r.witnesses.size(); ++i)
      for (size_t j = i + 1; j < r.witnesses.size(); ++j)
        CHECK_FALSE(subsets_congruent(g, r.witnesses[i], r.witnesses[j]));
  }
}

TEST_CASE("pruned search equals unpruned enumeration on small grounds") {
  std::vector<GroundSet> grounds;
  grounds.push_back(GroundSet::rational_grid(2));
  grounds.push_back(GroundSet::rational_grid(3));
  grounds.push_back(GroundSet::circle_divisions(7));
  grounds.push_back(GroundSet::circle_divisions(12));
  grounds.push_back(GroundSet::circle_divisions(10, true));
  grounds.push_back(GroundSet::eisenstein_ball(1));
  for (const auto& g : grounds) {
    REQUIRE(g.size() <= 12);
    for (int n = 3; n <= std::min(6, g.size()); ++n) {
      CHECK(min_triangles(g, n).best_count == brute_min(g, n));
    }
  }
}

TEST_CASE("best_count is monotone in subset size") {
  for (const GroundSet& g : {GroundSet::circle_divisions(12, true),
                             GroundSet::eisenstein_ball(2)}) {
    std::uint64_t prev = 0;
    for (int n = 3; n <= 7; ++n) {
      std::uint64_t cur = min_triangles(g, n).best_count;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("sequential search is deterministic") {
  GroundSet g = GroundSet::circle_divisions(10);
  SearchResult a = min_triangles(g, 5), b = min_triangles(g, 5);
  CHECK(a.best_count == b.best_count);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("parallel fan-out merges to the sequential result") {
  GroundSet g = GroundSet::circle_divisions(12, true);
  SearchOptions par;
  par.jobs = 4;
  SearchResult seq = min_triangles(g, 6);
  SearchResult p = min_triangles(g, 6, par);
  CHECK(p.best_count == seq.best_count);
  REQUIRE(!p.witnesses.empty());
  for (const auto& w : p.witnesses) CHECK(recount_classes(g, w) == seq.best_count);
}

TEST_CASE("budget truncation is flagged") {
  GroundSet g = GroundSet::rational_grid(3);
  SearchOptions opts;
  opts.budget = 1;
  SearchResult r = min_triangles(g, 6, opts);
  // Six grid points always make more than one class, so the cap must truncate.
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("exactly-t queries") {
  GroundSet grid3 = GroundSet::rational_grid(3);
  std::vector<int> witness;
  CHECK(exists_with_exactly(grid3, 4, 1, &witness));
  CHECK(recount_classes(grid3, witness) == 1);
  CHECK_FALSE(exists_with_exactly(grid3, 5, 1));

  FTableRow row = max_points_with_exactly(grid3, 1);
  CHECK(row.max_n == 4);
  CHECK(recount_classes(grid3, row.witness) == 1);
}

TEST_CASE("n larger than the ground set is rejected") {
  CHECK_THROWS((void)min_triangles(GroundSet::rational_grid(2), 5));
}

TEST_CASE("pair-key recount agrees with direct lattice class counting") {
  GroundSet ball = GroundSet::eisenstein_ball(2);
  std::vector<int> all(ball.size());
  for (int i = 0; i < ball.size(); ++i) all[i] = i;
  CHECK(recount_classes(ball, all) ==
        lattice_distinct_triangles(ball.lattice_sites()));
}

TEST_SUITE_END();
