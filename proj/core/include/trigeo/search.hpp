#pragma once

// Exhaustive and pruned subset search over structured finite ground sets:
// integer grids, rational circle divisions (optionally with the center), and
// a ball of the triangular (Eisenstein) lattice. All length comparisons go
// through exact canonical keys, so searches are decision-exact.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigeo/circle.hpp"
#include "trigeo/geometry.hpp"

namespace trigeo {

enum class GroundKind { RationalGrid, CircleDivisions, EisensteinBall };

class GroundSet {
 public:
  // k x k integer grid, spacing 1, row-major site order.
  static GroundSet rational_grid(int k);
  // Fractions {0, 1/d, ..., (d-1)/d}, increasing; the center, when present,
  // is the last site.
  static GroundSet circle_divisions(int d, bool with_center = false);
  // Lattice sites (a, b) with a^2 + ab + b^2 <= r^2, ordered by norm then
  // angle (spiral).
  static GroundSet eisenstein_ball(int r);

  GroundKind kind() const { return kind_; }
  const std::string& description() const { return description_; }
  int size() const { return (int)site_count_; }

  // Canonical length-class key of the pair (i, j); equal keys iff the two
  // segments are congruent.
  int pair_key(int i, int j) const { return pair_key_[i * (int)site_count_ + j]; }
  int key_count() const { return (int)key_names_.size(); }
  const std::string& key_name(int key) const { return key_names_[key]; }

  bool collinear_sites(int i, int j, int k) const;

  // Site payloads, by kind.
  const std::vector<Point>& grid_points() const { return grid_points_; }
  const std::vector<Rational>& circle_fractions() const { return circle_fractions_; }
  bool circle_with_center() const { return with_center_; }
  int center_site() const { return with_center_ ? (int)circle_fractions_.size() : -1; }
  const std::vector<std::array<long, 2>>& lattice_sites() const { return lattice_sites_; }

  std::string site_label(int i) const;

 private:
  GroundSet() = default;
  void finalize_keys();

  GroundKind kind_ = GroundKind::RationalGrid;
  std::string description_;
  size_t site_count_ = 0;
  std::vector<Point> grid_points_;
  std::vector<Rational> circle_fractions_;
  bool with_center_ = false;
  std::vector<std::array<long, 2>> lattice_sites_;
  // Integer coordinates used for fast collinearity (grid / lattice).
  std::vector<std::array<long, 2>> icoords_;
  std::vector<int> pair_key_;
  std::vector<std::string> key_names_;
};

struct SearchOptions {
  // Cap on the running class count; branches above it are cut and the result
  // is flagged non-exhaustive.
  std::optional<std::uint64_t> budget;
  int max_witnesses = 4;
  int jobs = 1;  // fan-out over the first chosen site; >1 only changes speed
};

struct SearchResult {
  int n = 0;
  // Minimum class count over n-subsets that determine at least one triangle
  // (all-collinear subsets determine none and are not competitors).
  std::uint64_t best_count = 0;
  std::vector<std::vector<int>> witnesses;  // site indices, congruence-deduplicated
  std::uint64_t nodes_explored = 0;
  bool exhaustive = true;
  std::string ground_description;
};

SearchResult min_triangles(const GroundSet& ground, int n, const SearchOptions& opts = {});

// Independent recount of a subset's class count from pair keys.
std::uint64_t recount_classes(const GroundSet& ground, std::span<const int> sites);

struct FTableRow {
  std::uint64_t t = 0;
  int max_n = 0;  // 0 when no subset achieves exactly t
  std::vector<int> witness;
  bool exhaustive = true;
  std::string ground_description;
};

// Largest n such that some n-subset determines exactly t classes.
FTableRow max_points_with_exactly(const GroundSet& ground, std::uint64_t t);

// True iff some n-subset has exactly t classes; fills witness when found.
bool exists_with_exactly(const GroundSet& ground, int n, std::uint64_t t,
                         std::vector<int>* witness = nullptr);

// Congruence test between two subsets of the same ground set (exact for each
// kind: planar isometries for grids, circle rotations/reflections for circle
// divisions, lattice point-group symmetries + translations for the lattice).
bool subsets_congruent(const GroundSet& ground, std::span<const int> a,
                       std::span<const int> b);

// Distinct-triangle classes of arbitrary lattice sites (a, b) under the
// Eisenstein squared-length form a^2 + ab + b^2. Optionally reports each
// class as its sorted triple of squared lengths.
std::uint64_t lattice_distinct_triangles(std::span<const std::array<long, 2>> sites,
                                         std::vector<std::array<long, 3>>* classes = nullptr);

struct EvidenceRow {
  std::string ground;
  int n = 0;
  std::uint64_t min_found = 0;
  std::uint64_t threshold = 0;
  bool ok = false;
  bool exhaustive = true;
};

struct EvidenceReport {
  std::string name;
  std::vector<EvidenceRow> rows;
  bool all_ok = true;
};

// Conjecture 1 evidence: every 7-subset of each ground set determines at
// least four distinct triangles. Ground-set-relative, not a proof.
EvidenceReport seven_points_evidence(std::span<const GroundSet> grounds);

// Conjecture 2 evidence: the minimum over n-subsets is at least the regular
// n-gon's class count round(n^2/12).
EvidenceReport regular_polygon_evidence(std::span<const GroundSet> grounds,
                                        std::span<const int> sizes);

}  // namespace trigeo
