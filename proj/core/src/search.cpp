#include "trigeo/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "trigeo/congruence.hpp"

namespace trigeo {

namespace {

long icross(const std::array<long, 2>& u, const std::array<long, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

}  // namespace

GroundSet GroundSet::rational_grid(int k) {
  if (k < 2) throw std::invalid_argument("grid needs k >= 2");
  GroundSet g;
  g.kind_ = GroundKind::RationalGrid;
  g.description_ = "RationalGrid(k=" + std::to_string(k) + ")";
  for (int y = 0; y < k; ++y)
    for (int x = 0; x < k; ++x) {
      g.grid_points_.push_back(Point{Rational(x), Rational(y)});
      g.icoords_.push_back({x, y});
    }
  g.site_count_ = g.grid_points_.size();
  g.finalize_keys();
  return g;
}

GroundSet GroundSet::circle_divisions(int d, bool with_center) {
  if (d < 3) throw std::invalid_argument("circle divisions need D >= 3");
  GroundSet g;
  g.kind_ = GroundKind::CircleDivisions;
  g.description_ = "CircleDivisions(D=" + std::to_string(d) +
                   (with_center ? ",center)" : ")");
  for (int k = 0; k < d; ++k) g.circle_fractions_.emplace_back(k, d);
  g.with_center_ = with_center;
  g.site_count_ = g.circle_fractions_.size() + (with_center ? 1 : 0);
  g.finalize_keys();
  return g;
}

GroundSet GroundSet::eisenstein_ball(int r) {
  if (r < 1) throw std::invalid_argument("eisenstein ball needs r >= 1");
  GroundSet g;
  g.kind_ = GroundKind::EisensteinBall;
  g.description_ = "EisensteinBall(r=" + std::to_string(r) + ")";
  std::vector<std::array<long, 2>> sites;
  for (long a = -2L * r; a <= 2L * r; ++a)
    for (long b = -2L * r; b <= 2L * r; ++b)
      if (a * a + a * b + b * b <= (long)r * r) sites.push_back({a, b});
  // Spiral order: by norm, then by angle from the positive x-axis,
  // counterclockwise. Embedded direction of (a, b) is (2a+b, b*sqrt(3)).
  auto norm = [](const std::array<long, 2>& s) {
    return s[0] * s[0] + s[0] * s[1] + s[1] * s[1];
  };
  auto angle_less = [](const std::array<long, 2>& p, const std::array<long, 2>& q) {
    long px = 2 * p[0] + p[1], py = p[1];
    long qx = 2 * q[0] + q[1], qy = q[1];
    auto half = [](long x, long y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; };
    int hp = half(px, py), hq = half(qx, qy);
    if (hp != hq) return hp < hq;
    return px * qy - qx * py < 0;  // p at smaller ccw angle
  };
  std::sort(sites.begin(), sites.end(),
            [&](const auto& p, const auto& q) {
              long np = norm(p), nq = norm(q);
              if (np != nq) return np < nq;
              return angle_less(p, q);
            });
  g.lattice_sites_ = sites;
  g.icoords_ = sites;
  g.site_count_ = sites.size();
  g.finalize_keys();
  return g;
}

void GroundSet::finalize_keys() {
  const int n = (int)site_count_;
  pair_key_.assign((size_t)n * n, -1);

  // Canonical comparable value per pair, then a dense id by sorted order.
  std::map<Rational, int> rational_keys;
  std::map<long, int> integer_keys;

  auto pair_value_int = [&](int i, int j) {
    long dx = icoords_[i][0] - icoords_[j][0];
    long dy = icoords_[i][1] - icoords_[j][1];
    if (kind_ == GroundKind::RationalGrid) return dx * dx + dy * dy;
    return dx * dx + dx * dy + dy * dy;
  };
  auto pair_value_circle = [&](int i, int j) -> Rational {
    int c = center_site();
    if (i == c || j == c) return center_chord_class();
    return chord_class(circle_fractions_[i], circle_fractions_[j]);
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (kind_ == GroundKind::CircleDivisions)
        rational_keys.emplace(pair_value_circle(i, j), 0);
      else
        integer_keys.emplace(pair_value_int(i, j), 0);
    }
  int next = 0;
  for (auto& [v, id] : rational_keys) {
    id = next++;
    key_names_.push_back(to_string(v));
  }
  for (auto& [v, id] : integer_keys) {
    id = next++;
    key_names_.push_back(std::to_string(v));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int id = kind_ == GroundKind::CircleDivisions
                   ? rational_keys[pair_value_circle(i, j)]
                   : integer_keys[pair_value_int(i, j)];
      pair_key_[(size_t)i * n + j] = pair_key_[(size_t)j * n + i] = id;
    }
}

bool GroundSet::collinear_sites(int i, int j, int k) const {
  if (kind_ == GroundKind::CircleDivisions) {
    int c = center_site();
    if (i != c && j != c && k != c) return false;  // three circle points
    int a = (i == c) ? j : i;
    int b = (i == c || j == c) ? k : j;
    // Center plus an antipodal pair.
    return chord_class(circle_fractions_[a], circle_fractions_[b]) == Rational(1, 2);
  }
  std::array<long, 2> u{icoords_[j][0] - icoords_[i][0], icoords_[j][1] - icoords_[i][1]};
  std::array<long, 2> v{icoords_[k][0] - icoords_[i][0], icoords_[k][1] - icoords_[i][1]};
  return icross(u, v) == 0;
}

std::string GroundSet::site_label(int i) const {
  switch (kind_) {
    case GroundKind::RationalGrid:
      return "(" + std::to_string(icoords_[i][0]) + "," + std::to_string(icoords_[i][1]) + ")";
    case GroundKind::CircleDivisions:
      if (i == center_site()) return "center";
      return to_string(circle_fractions_[i]);
    case GroundKind::EisensteinBall:
      return "(" + std::to_string(lattice_sites_[i][0]) + "," +
             std::to_string(lattice_sites_[i][1]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Subset congruence per ground-set kind.

namespace {

// Canonical form of a circle subset: lexicographically minimal cyclic gap
// sequence over all rotations, for the sequence and its reversal.
std::vector<Rational> circle_canonical_gaps(const GroundSet& g, std::span<const int> sites) {
  std::vector<Rational> fr;
  for (int s : sites)
    if (s != g.center_site()) fr.push_back(g.circle_fractions()[s]);
  std::sort(fr.begin(), fr.end());
  const size_t m = fr.size();
  std::vector<Rational> gaps(m);
  for (size_t i = 0; i + 1 < m; ++i) gaps[i] = fr[i + 1] - fr[i];
  if (m > 0) gaps[m - 1] = Rational(1) - fr[m - 1] + fr[0];

  std::vector<Rational> best;
  auto consider = [&](const std::vector<Rational>& seq) {
    for (size_t rot = 0; rot < seq.size(); ++rot) {
      std::vector<Rational> cand(seq.size());
      for (size_t i = 0; i < seq.size(); ++i) cand[i] = seq[(rot + i) % seq.size()];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  };
  consider(gaps);
  std::reverse(gaps.begin(), gaps.end());
  consider(gaps);
  return best;
}

// The 12 symmetries of the triangular lattice in basis coordinates:
// R60: (a,b) -> (-b, a+b); mirror: (a,b) -> (a+b, -b).
std::array<long, 2> lattice_transform(const std::array<long, 2>& s, int which) {
  std::array<long, 2> p = s;
  if (which >= 6) p = {p[0] + p[1], -p[1]};
  for (int r = 0; r < which % 6; ++r) p = {-p[1], p[0] + p[1]};
  return p;
}

std::vector<std::array<long, 2>> lattice_canonical(const GroundSet& g,
                                                   std::span<const int> sites) {
  std::vector<std::array<long, 2>> best;
  for (int t = 0; t < 12; ++t) {
    std::vector<std::array<long, 2>> img;
    img.reserve(sites.size());
    for (int s : sites) img.push_back(lattice_transform(g.lattice_sites()[s], t));
    std::sort(img.begin(), img.end());
    // Translate the lexicographically smallest site to the origin.
    const auto base = img.front();
    for (auto& p : img) {
      p[0] -= base[0];
      p[1] -= base[1];
    }
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

}  // namespace

bool subsets_congruent(const GroundSet& ground, std::span<const int> a,
                       std::span<const int> b) {
  if (a.size() != b.size()) return false;
  switch (ground.kind()) {
    case GroundKind::RationalGrid: {
      std::vector<Point> pa, pb;
      for (int s : a) pa.push_back(ground.grid_points()[s]);
      for (int s : b) pb.push_back(ground.grid_points()[s]);
      return configurations_congruent(pa, pb);
    }
    case GroundKind::CircleDivisions: {
      int c = ground.center_site();
      bool ca = std::find(a.begin(), a.end(), c) != a.end();
      bool cb = std::find(b.begin(), b.end(), c) != b.end();
      if (ca != cb) return false;
      return circle_canonical_gaps(ground, a) == circle_canonical_gaps(ground, b);
    }
    case GroundKind::EisensteinBall:
      return lattice_canonical(ground, a) == lattice_canonical(ground, b);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Pruned depth-first subset search.

namespace {

constexpr std::uint64_t kUnknown = ~0ULL;

std::uint64_t pack_sig(int a, int b, int c) {
  // Keys fit easily in 16 bits for every supported ground set.
  int t[3] = {a, b, c};
  std::sort(t, t + 3);
  return ((std::uint64_t)t[0] << 32) | ((std::uint64_t)t[1] << 16) | (std::uint64_t)t[2];
}

struct DfsState {
  const GroundSet& g;
  int n;
  std::optional<std::uint64_t> budget;
  int max_witnesses;

  std::vector<int> chosen;
  std::unordered_set<std::uint64_t> classes;
  std::vector<std::vector<std::uint64_t>> undo;

  std::uint64_t best = kUnknown;
  std::vector<std::vector<int>> witnesses;
  std::uint64_t nodes = 0;
  bool truncated = false;

  explicit DfsState(const GroundSet& ground, int size,
                    std::optional<std::uint64_t> bud, int max_w)
      : g(ground), n(size), budget(bud), max_witnesses(max_w) {}

  void push(int s) {
    undo.emplace_back();
    auto& added = undo.back();
    for (size_t i = 0; i < chosen.size(); ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j) {
        int a = chosen[i], b = chosen[j];
        if (g.collinear_sites(a, b, s)) continue;
        std::uint64_t sig =
            pack_sig(g.pair_key(a, b), g.pair_key(a, s), g.pair_key(b, s));
        if (classes.insert(sig).second) added.push_back(sig);
      }
    chosen.push_back(s);
  }

  void pop() {
    chosen.pop_back();
    for (std::uint64_t sig : undo.back()) classes.erase(sig);
    undo.pop_back();
  }

  bool witnesses_full() const { return (int)witnesses.size() >= max_witnesses; }

  void complete() {
    std::uint64_t cnt = classes.size();
    if (cnt == 0) return;  // all collinear: determines no triangle
    if (cnt < best) {
      best = cnt;
      witnesses.clear();
      witnesses.push_back(chosen);
    } else if (cnt == best && !witnesses_full()) {
      for (const auto& w : witnesses)
        if (subsets_congruent(g, w, chosen)) return;
      witnesses.push_back(chosen);
    }
  }

  // True when the branch below the just-pushed site is worth exploring.
  bool viable() {
    std::uint64_t cnt = classes.size();
    if (budget && cnt > *budget) {
      truncated = true;
      return false;
    }
    if (best != kUnknown) {
      if (cnt > best) return false;
      if (cnt == best && witnesses_full()) return false;
    }
    return true;
  }

  void dfs(int start) {
    if ((int)chosen.size() == n) {
      complete();
      return;
    }
    int need = n - (int)chosen.size();
    for (int s = start; s <= g.size() - need; ++s) {
      ++nodes;
      push(s);
      if (viable()) dfs(s + 1);
      pop();
    }
  }
};

SearchResult run_sequential(const GroundSet& g, int n, const SearchOptions& opts,
                            int first_site /* -1 = all */) {
  DfsState st(g, n, opts.budget, opts.max_witnesses);
  if (first_site >= 0) {
    ++st.nodes;
    st.push(first_site);
    if (st.viable()) st.dfs(first_site + 1);
    st.pop();
  } else {
    st.dfs(0);
  }
  SearchResult r;
  r.n = n;
  r.best_count = st.best == kUnknown ? 0 : st.best;
  r.witnesses = std::move(st.witnesses);
  r.nodes_explored = st.nodes;
  r.exhaustive = !st.truncated;
  r.ground_description = g.description();
  if (st.best == kUnknown) r.witnesses.clear();
  return r;
}

}  // namespace

SearchResult min_triangles(const GroundSet& ground, int n, const SearchOptions& opts) {
  if (n < 3) throw std::invalid_argument("subset size must be at least 3");
  if (n > ground.size()) throw std::invalid_argument("subset size exceeds ground set");

  if (opts.jobs <= 1)
    return run_sequential(ground, n, opts, -1);

  // Fan out over the first chosen site; workers are independent, results are
  // merged in site order so the outcome matches a deterministic reduction.
  int first_max = ground.size() - n;
  std::vector<std::future<SearchResult>> futs;
  for (int s = 0; s <= first_max; ++s)
    futs.push_back(std::async(std::launch::async | std::launch::deferred,
                              [&ground, n, &opts, s] {
                                return run_sequential(ground, n, opts, s);
                              }));
  SearchResult merged;
  merged.n = n;
  merged.best_count = kUnknown;
  merged.ground_description = ground.description();
  for (auto& f : futs) {
    SearchResult part = f.get();
    merged.nodes_explored += part.nodes_explored;
    merged.exhaustive = merged.exhaustive && part.exhaustive;
    if (part.witnesses.empty()) continue;
    if (merged.best_count == kUnknown || part.best_count < merged.best_count) {
      merged.best_count = part.best_count;
      merged.witnesses = std::move(part.witnesses);
    } else if (part.best_count == merged.best_count) {
      for (auto& w : part.witnesses) {
        if ((int)merged.witnesses.size() >= opts.max_witnesses) break;
        bool dup = false;
        for (const auto& have : merged.witnesses)
          if (subsets_congruent(ground, have, w)) {
            dup = true;
            break;
          }
        if (!dup) merged.witnesses.push_back(std::move(w));
      }
    }
  }
  if (merged.best_count == kUnknown) merged.best_count = 0;
  return merged;
}

std::uint64_t recount_classes(const GroundSet& ground, std::span<const int> sites) {
  std::unordered_set<std::uint64_t> classes;
  for (size_t i = 0; i < sites.size(); ++i)
    for (size_t j = i + 1; j < sites.size(); ++j)
      for (size_t k = j + 1; k < sites.size(); ++k) {
        int a = sites[i], b = sites[j], c = sites[k];
        if (ground.collinear_sites(a, b, c)) continue;
        classes.insert(pack_sig(ground.pair_key(a, b), ground.pair_key(a, c),
                                ground.pair_key(b, c)));
      }
  return classes.size();
}

bool exists_with_exactly(const GroundSet& ground, int n, std::uint64_t t,
                         std::vector<int>* witness) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (n < 3 || n > ground.size()) return false;

  struct ExactDfs {
    const GroundSet& g;
    int n;
    std::uint64_t t;
    std::vector<int> chosen;
    std::unordered_set<std::uint64_t> classes;
    std::vector<std::vector<std::uint64_t>> undo;
    std::vector<int> found;

    bool dfs(int start) {
      if ((int)chosen.size() == n) {
        if (classes.size() == t) {
          found = chosen;
          return true;
        }
        return false;
      }
      int need = n - (int)chosen.size();
      for (int s = start; s <= g.size() - need; ++s) {
        undo.emplace_back();
        auto& added = undo.back();
        for (size_t i = 0; i < chosen.size(); ++i)
          for (size_t j = i + 1; j < chosen.size(); ++j) {
            int a = chosen[i], b = chosen[j];
            if (g.collinear_sites(a, b, s)) continue;
            std::uint64_t sig =
                pack_sig(g.pair_key(a, b), g.pair_key(a, s), g.pair_key(b, s));
            if (classes.insert(sig).second) added.push_back(sig);
          }
        chosen.push_back(s);
        bool ok = classes.size() <= t && dfs(s + 1);
        chosen.pop_back();
        for (std::uint64_t sig : undo.back()) classes.erase(sig);
        undo.pop_back();
        if (ok) return true;
      }
      return false;
    }
  };

  ExactDfs st{ground, n, t};
  if (!st.dfs(0)) return false;
  if (witness) *witness = st.found;
  return true;
}

FTableRow max_points_with_exactly(const GroundSet& ground, std::uint64_t t) {
  FTableRow row;
  row.t = t;
  row.ground_description = ground.description();
  for (int n = ground.size(); n >= 3; --n) {
    std::vector<int> w;
    if (exists_with_exactly(ground, n, t, &w)) {
      row.max_n = n;
      row.witness = std::move(w);
      return row;
    }
  }
  return row;  // max_n = 0: nothing achieves exactly t
}

std::uint64_t lattice_distinct_triangles(std::span<const std::array<long, 2>> sites,
                                         std::vector<std::array<long, 3>>* classes) {
  auto q = [](long da, long db) { return da * da + da * db + db * db; };
  std::set<std::array<long, 3>> seen;
  const size_t n = sites.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        long ux = sites[j][0] - sites[i][0], uy = sites[j][1] - sites[i][1];
        long vx = sites[k][0] - sites[i][0], vy = sites[k][1] - sites[i][1];
        if (ux * vy - uy * vx == 0) continue;
        std::array<long, 3> t{q(ux, uy), q(vx, vy),
                              q(sites[k][0] - sites[j][0], sites[k][1] - sites[j][1])};
        std::sort(t.begin(), t.end());
        seen.insert(t);
      }
  if (classes) classes->assign(seen.begin(), seen.end());
  return seen.size();
}

EvidenceReport seven_points_evidence(std::span<const GroundSet> grounds) {
  EvidenceReport rep;
  rep.name = "seven_points";
  for (const GroundSet& g : grounds) {
    SearchResult r = min_triangles(g, 7);
    EvidenceRow row;
    row.ground = g.description();
    row.n = 7;
    row.min_found = r.best_count;
    row.threshold = 4;
    row.exhaustive = r.exhaustive;
    row.ok = r.best_count >= 4;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

EvidenceReport regular_polygon_evidence(std::span<const GroundSet> grounds,
                                        std::span<const int> sizes) {
  EvidenceReport rep;
  rep.name = "regular_polygon_optimal";
  for (const GroundSet& g : grounds)
    for (int n : sizes) {
      if (n > g.size()) continue;
      SearchResult r = min_triangles(g, n);
      EvidenceRow row;
      row.ground = g.description();
      row.n = n;
      row.min_found = r.best_count;
      row.threshold = ngon_triangle_count((std::uint64_t)n);
      row.exhaustive = r.exhaustive;
      row.ok = r.best_count >= row.threshold;
      rep.all_ok = rep.all_ok && row.ok;
      rep.rows.push_back(std::move(row));
    }
  return rep;
}

}  // namespace trigeo
