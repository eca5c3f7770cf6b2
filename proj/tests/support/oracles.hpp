#pragma once

// Independent brute-force oracles shared by the unit tests and the
// acceptance binary. Nothing here calls the library routine it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "sitepc/configuration.hpp"
#include "sitepc/connectivity.hpp"
#include "sitepc/enumeration.hpp"
#include "sitepc/lace.hpp"
#include "sitepc/lattice.hpp"

namespace oracle {

using sitepc::Configuration;
using sitepc::Point;
using sitepc::SiteIndex;
using sitepc::TorusGeometry;

// ---- walks and cycles -----------------------------------------------------

inline std::uint64_t walk_count(int d, int m, const Point& x) {
  std::uint64_t count = 0;
  std::function<void(Point, int)> step = [&](Point at, int left) {
    if (left == 0) {
      count += at == x;
      return;
    }
    for (int axis = 0; axis < d; ++axis) {
      for (int sign : {-1, 1}) {
        at[axis] += sign;
        step(at, left - 1);
        at[axis] -= sign;
      }
    }
  };
  step(Point::origin(d), m);
  return count;
}

/// Undirected self-avoiding cycles of `length` edges through 0 and x: closed
/// self-avoiding walks from 0 that visit x, halved for the two directions.
inline std::uint64_t cycle_count(int d, const Point& x, int length) {
  std::uint64_t closed = 0;
  std::vector<Point> path{Point::origin(d)};
  std::function<void()> extend = [&] {
    const Point at = path.back();
    for (int axis = 0; axis < d; ++axis) {
      for (int sign : {-1, 1}) {
        Point next = at;
        next[axis] += sign;
        const int edges = static_cast<int>(path.size());
        if (next == path.front()) {
          if (edges == length && std::find(path.begin(), path.end(), x) != path.end()) ++closed;
          continue;
        }
        if (edges >= length || std::find(path.begin(), path.end(), next) != path.end()) continue;
        if (sitepc::l1_norm(next) > length - edges) continue;
        path.push_back(next);
        extend();
        path.pop_back();
      }
    }
  };
  extend();
  return closed / 2;
}

/// P(some cycle of the family has its interior occupied) by summing over all
/// occupancy assignments of the interior sites.
inline double union_probability(const sitepc::CycleFamily& family, double p) {
  const auto sites = family.interior_sites();
  const int k = static_cast<int>(sites.size());
  std::vector<std::uint32_t> masks;
  for (const auto& interior : family.interiors) {
    std::uint32_t m = 0;
    for (const auto& v : interior) {
      m |= 1u << (std::lower_bound(sites.begin(), sites.end(), v) - sites.begin());
    }
    masks.push_back(m);
  }
  double total = 0.0;
  for (std::uint32_t occ = 0; occ < (1u << k); ++occ) {
    bool hit = false;
    for (auto m : masks) hit = hit || (m & ~occ) == 0;
    if (!hit) continue;
    const int n = __builtin_popcount(occ);
    total += std::pow(p, n) * std::pow(1.0 - p, k - n);
  }
  return total;
}

// ---- clusters -------------------------------------------------------------

/// Cluster label per site by plain BFS: the smallest site index of the
/// cluster, or -1 for vacant sites.
inline std::vector<std::int64_t> bfs_labels(const Configuration& c) {
  const auto& g = c.geometry();
  std::vector<std::int64_t> label(g.size(), -1);
  for (SiteIndex s = 0; s < g.size(); ++s) {
    if (!c.occupied(s) || label[s] >= 0) continue;
    std::queue<SiteIndex> q;
    q.push(s);
    label[s] = static_cast<std::int64_t>(s);
    while (!q.empty()) {
      const SiteIndex v = q.front();
      q.pop();
      for (int dir = 0; dir < g.degree(); ++dir) {
        const SiteIndex w = g.neighbor(v, dir);
        if (c.occupied(w) && label[w] < 0) {
          label[w] = static_cast<std::int64_t>(s);
          q.push(w);
        }
      }
    }
  }
  return label;
}

/// Bitmask of axes around which the cluster of s winds: BFS with unwrapped
/// coordinates; a site reached at two unwrapped positions closes a winding
/// loop along every axis where the positions differ.
inline std::uint32_t bfs_wrap_axes(const Configuration& c, SiteIndex s) {
  const auto& g = c.geometry();
  if (!c.occupied(s)) return 0;
  std::map<SiteIndex, std::vector<int>> pos;
  std::vector<int> start(static_cast<std::size_t>(g.d()), 0);
  pos[s] = start;
  std::queue<SiteIndex> q;
  q.push(s);
  std::uint32_t axes = 0;
  while (!q.empty()) {
    const SiteIndex v = q.front();
    q.pop();
    for (int dir = 0; dir < g.degree(); ++dir) {
      const SiteIndex w = g.neighbor(v, dir);
      if (!c.occupied(w)) continue;
      std::vector<int> pw = pos[v];
      pw[static_cast<std::size_t>(dir >> 1)] += (dir & 1) ? 1 : -1;
      auto it = pos.find(w);
      if (it == pos.end()) {
        pos[w] = pw;
        q.push(w);
      } else {
        for (int a = 0; a < g.d(); ++a) {
          if (it->second[static_cast<std::size_t>(a)] != pw[static_cast<std::size_t>(a)]) axes |= 1u << a;
        }
      }
    }
  }
  return axes;
}

// ---- windows --------------------------------------------------------------

/// Sites of a box window [0, extent_0) x ... embedded in a torus, with the
/// configuration "window sites occupied per mask, everything else vacant".
struct Window {
  TorusGeometry geometry;
  std::vector<SiteIndex> sites;
  std::vector<Point> points;

  Window(int d, int L, std::vector<int> extent) : geometry(d, L) {
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    std::function<void(int)> fill = [&](int axis) {
      if (axis == d) {
        points.emplace_back(c);
        sites.push_back(geometry.index(points.back()));
        return;
      }
      for (int v = 0; v < extent[static_cast<std::size_t>(axis)]; ++v) {
        c[static_cast<std::size_t>(axis)] = v;
        fill(axis + 1);
      }
    };
    fill(0);
  }

  int size() const { return static_cast<int>(sites.size()); }
  int slot(const Point& x) const {
    return static_cast<int>(std::find(points.begin(), points.end(), x) - points.begin());
  }

  Configuration configuration(std::uint64_t mask) const {
    std::vector<SiteIndex> occ;
    for (int i = 0; i < size(); ++i) {
      if (mask >> i & 1) occ.push_back(sites[static_cast<std::size_t>(i)]);
    }
    return Configuration::from_sites(geometry, occ);
  }

  /// Interior masks of every self-avoiding window path from slot a to slot b.
  std::vector<std::uint64_t> path_interiors(int a, int b) const {
    std::vector<std::uint64_t> out;
    std::vector<char> on(static_cast<std::size_t>(size()), 0);
    std::function<void(int, std::uint64_t)> dfs = [&](int at, std::uint64_t interior) {
      for (int j = 0; j < size(); ++j) {
        if (on[static_cast<std::size_t>(j)] || sitepc::l1_norm(points[static_cast<std::size_t>(j)] - points[static_cast<std::size_t>(at)]) != 1) continue;
        if (j == b) {
          out.push_back(interior);
          continue;
        }
        on[static_cast<std::size_t>(j)] = 1;
        dfs(j, interior | (std::uint64_t{1} << j));
        on[static_cast<std::size_t>(j)] = 0;
      }
    };
    on[static_cast<std::size_t>(a)] = 1;
    dfs(a, 0);
    return out;
  }
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
};

/// Max-flow double connection against a search over pairs of window paths
/// with disjoint interiors, for every configuration of the window and every
/// target in it. The origin is the window corner.
inline Tally double_connection_window(int d, int L, std::vector<int> extent) {
  const Window w(d, L, std::move(extent));
  const int u = 0;
  Tally t;
  std::vector<std::vector<std::uint64_t>> paths(static_cast<std::size_t>(w.size()));
  for (int x = 1; x < w.size(); ++x) paths[static_cast<std::size_t>(x)] = w.path_interiors(u, x);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
    const Configuration c = w.configuration(mask);
    for (int x = 1; x < w.size(); ++x) {
      std::vector<std::uint64_t> open;
      for (auto m : paths[static_cast<std::size_t>(x)]) {
        if ((m & ~mask) == 0) open.push_back(m);
      }
      bool expected = false;
      for (std::size_t i = 0; i < open.size() && !expected; ++i) {
        for (std::size_t j = i; j < open.size() && !expected; ++j) expected = (open[i] & open[j]) == 0;
      }
      const bool actual = sitepc::doubly_connected(c, w.sites[0], w.sites[static_cast<std::size_t>(x)]);
      ++t.checked;
      t.mismatches += expected != actual;
    }
  }
  return t;
}

/// pivotal_points against testing every site of the window and its outer
/// shell with forced / removed connectivity queries. Sites farther out have
/// only vacant neighbours and cannot change any connection. Endpoints are the
/// opposite corners; all assignments of the other window sites are checked.
inline Tally pivotal_window(int d, int L, std::vector<int> extent) {
  const Window w(d, L, extent);
  const int u = 0;
  const int x = w.size() - 1;
  const SiteIndex us = w.sites[static_cast<std::size_t>(u)];
  const SiteIndex xs = w.sites[static_cast<std::size_t>(x)];
  sitepc::SiteSet candidates(w.sites.begin(), w.sites.end());
  for (SiteIndex s : w.sites) {
    for (int dir = 0; dir < w.geometry.degree(); ++dir) candidates.insert(w.geometry.neighbor(s, dir));
  }
  std::vector<SiteIndex> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  Tally t;
  const int free_bits = w.size() - 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_bits); ++m) {
    const std::uint64_t mask = m << 1;  // slots 0 and size-1 are the endpoints
    const Configuration c = w.configuration(mask);
    const sitepc::SiteSet actual = sitepc::pivotal_points(c, us, xs);
    sitepc::SiteSet expected;
    for (SiteIndex v : cand) {
      const sitepc::SiteSet one{v};
      sitepc::Constraints forced, removed;
      forced.forced = &one;
      removed.removed = &one;
      if (sitepc::connected(c, us, xs, forced) && !sitepc::connected(c, us, xs, removed)) expected.insert(v);
    }
    ++t.checked;
    t.mismatches += expected != actual;
  }
  return t;
}

/// Union-find labels against BFS labels on random configurations.
inline Tally union_find_random(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < cases; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int L = 4 + 2 * static_cast<int>(rng() % 7);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const TorusGeometry g(d, L);
    const Configuration c = Configuration::sample(g, p, rng(), 0, sitepc::Storage::dense);
    const auto uf = sitepc::cluster_labels(c);
    const auto bfs = bfs_labels(c);
    // Same partition: map union-find roots to BFS labels injectively.
    std::map<std::uint32_t, std::int64_t> root_to_bfs;
    std::map<std::int64_t, std::uint32_t> bfs_to_root;
    bool ok = true;
    for (SiteIndex s = 0; s < g.size() && ok; ++s) {
      if ((uf[s] == sitepc::kVacantLabel) != (bfs[s] < 0)) {
        ok = false;
        break;
      }
      if (bfs[s] < 0) continue;
      auto [a, fresh_a] = root_to_bfs.emplace(uf[s], bfs[s]);
      auto [b, fresh_b] = bfs_to_root.emplace(bfs[s], uf[s]);
      ok = a->second == bfs[s] && b->second == uf[s];
    }
    ++t.checked;
    t.mismatches += !ok;
  }
  return t;
}

// ---- Observation 4.3 ------------------------------------------------------

/// Bitmask engine for the radius-2 ball around a = 0 in Z^3 with every site
/// outside the ball vacant. Site i of the ball is bit i.
struct BallEngine {
  std::vector<Point> points;
  std::vector<std::uint32_t> adj;

  BallEngine() : points(sitepc::ball(3, 2)) {
    const int n = static_cast<int>(points.size());
    adj.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (sitepc::l1_norm(points[static_cast<std::size_t>(i)] - points[static_cast<std::size_t>(j)]) == 1) {
          adj[static_cast<std::size_t>(i)] |= 1u << j;
        }
      }
    }
  }

  int slot(const Point& x) const {
    return static_cast<int>(std::find(points.begin(), points.end(), x) - points.begin());
  }

  /// Ball sites reachable from `from` through interiors in `usable`.
  std::uint32_t reach(int from, std::uint32_t usable) const {
    std::uint32_t seen = 1u << from;
    std::uint32_t frontier = 1u << from;
    std::uint32_t out = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
      next &= ~seen;
      seen |= next;
      out |= next;
      frontier = next & usable;
    }
    return out & ~(1u << from);
  }

  /// E'(u, v; {a}) with <A> = thick, straight from the definitions.
  bool eprime(int u, int v, std::uint32_t occ, std::uint32_t thick) const {
    const std::uint32_t usable = occ & ~(1u << u);
    const std::uint32_t all = reach(u, usable);
    const std::uint32_t off = reach(u, usable & ~thick);
    auto through = [&](int y) { return (all >> y & 1) && ((thick >> y & 1) || !(off >> y & 1)); };
    if (!through(v)) return false;
    for (std::uint32_t cand = usable & ~(1u << v); cand; cand &= cand - 1) {
      const int w = __builtin_ctz(cand);
      if (!(reach(u, usable & ~(1u << w)) >> v & 1) && through(w)) return false;
    }
    return true;
  }

  /// A u-v path with occupied interior and at least `min_edges` edges.
  bool long_path(int u, int v, std::uint32_t occ, int min_edges) const {
    std::function<bool(int, std::uint32_t, int)> dfs = [&](int at, std::uint32_t used, int edges) {
      for (std::uint32_t nb = adj[static_cast<std::size_t>(at)]; nb; nb &= nb - 1) {
        const int w = __builtin_ctz(nb);
        if (w == v) {
          if (edges + 1 >= min_edges) return true;
          continue;
        }
        if ((used >> w & 1) || !(occ >> w & 1)) continue;
        if (dfs(w, used | (1u << w), edges + 1)) return true;
      }
      return false;
    };
    return dfs(u, 1u << u, 0);
  }
};

struct Obs43Result {
  std::uint64_t configurations = 0;
  std::uint64_t events = 0;           // configurations where E' holds
  std::uint64_t counterexamples = 0;  // E' holds but no path of >= 4 edges
  std::uint64_t library_checked = 0;
  std::uint64_t library_mismatches = 0;  // engine vs sitepc::eprime / long_path_connected
};

/// E'(u, v; {a}) with t = u + v - a vacant or t = a implies a u-v path of at
/// least 4 edges. Up to lattice symmetry (a, u, v) is (0, e1, e2) with
/// t = e1 + e2 vacant, or (0, e1, -e1) with t = a. Both are scanned over
/// every assignment of the ball sites other than u. A random subset is also
/// replayed through the library on a torus to pin the engine to it.
inline Obs43Result observation_4_3(std::uint64_t library_samples, std::uint64_t seed) {
  const BallEngine e;
  const int a = e.slot({0, 0, 0});
  std::uint32_t thick = 1u << a;
  thick |= e.adj[static_cast<std::size_t>(a)];
  struct Case {
    int u, v, t;
  };
  const Case cases[] = {{e.slot({1, 0, 0}), e.slot({0, 1, 0}), e.slot({1, 1, 0})},
                        {e.slot({1, 0, 0}), e.slot({-1, 0, 0}), a}};
  const int n = static_cast<int>(e.points.size());
  Obs43Result r;
  const TorusGeometry g(3, 8);
  const sitepc::ThickenedSet A(g, sitepc::SiteSet{g.origin()});
  std::mt19937_64 rng(seed);
  for (const Case& c : cases) {
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (i != c.u && !(i == c.t && c.t != a)) free.push_back(i);
    }
    const std::uint64_t total = std::uint64_t{1} << free.size();
    const double keep = static_cast<double>(library_samples) / static_cast<double>(total);
    for (std::uint64_t m = 0; m < total; ++m) {
      std::uint32_t occ = 0;
      for (std::size_t b = 0; b < free.size(); ++b) {
        if (m >> b & 1) occ |= 1u << free[b];
      }
      ++r.configurations;
      const bool ep = e.eprime(c.u, c.v, occ, thick);
      bool lp = false;
      if (ep) {
        ++r.events;
        lp = e.long_path(c.u, c.v, occ, 4);
        r.counterexamples += !lp;
      }
      if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < keep) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
          if (occ >> i & 1) pts.push_back(e.points[static_cast<std::size_t>(i)]);
        }
        const Configuration conf = Configuration::from_points(g, pts);
        const SiteIndex us = g.index(e.points[static_cast<std::size_t>(c.u)]);
        const SiteIndex vs = g.index(e.points[static_cast<std::size_t>(c.v)]);
        const bool lib_ep = sitepc::eprime(conf, us, vs, A);
        const bool lib_lp = sitepc::long_path_connected(conf, us, vs, 4);
        ++r.library_checked;
        r.library_mismatches += (lib_ep != ep) || (ep && lib_lp != lp);
      }
    }
  }
  return r;
}

// ---- walk-count structure -------------------------------------------------

struct WalkStructure {
  std::uint64_t parity_checked = 0;
  std::uint64_t parity_failures = 0;
  std::uint64_t degree_checked = 0;
  std::uint64_t degree_failures = 0;  // wrong degree or leading coefficient > m!
};

/// Parity of J^{*m} on every table entry for m <= m_max, d <= d_max, and the
/// Omega-polynomial structure for every point class (sorted nonnegative
/// coordinates) whose interpolation fits in d <= d_max.
inline WalkStructure walk_structure(int m_max, int d_max) {
  WalkStructure r;
  std::map<std::pair<int, int>, sitepc::WalkTable> tables;
  auto table = [&](int d, int m) -> const sitepc::WalkTable& {
    auto it = tables.find({d, m});
    if (it == tables.end()) it = tables.emplace(std::pair{d, m}, sitepc::walk_counts(d, m)).first;
    return it->second;
  };
  for (int m = 0; m <= m_max; ++m) {
    for (int d = 1; d <= d_max; ++d) {
      for (const auto& x : sitepc::ball(d, m)) {
        const bool allowed = (m - sitepc::l1_norm(x)) % 2 == 0;
        ++r.parity_checked;
        r.parity_failures += (table(d, m).at(x) != 0) != allowed;
      }
    }
  }
  sitepc::BigInt factorial = 1;
  for (int m = 1; m <= m_max; ++m) {
    factorial *= m;
    // Classes: nonincreasing positive coordinate lists with sum <= m and the
    // parity of m.
    std::function<void(std::vector<int>, int, int)> classes = [&](std::vector<int> coords, int left, int cap) {
      const int norm = m - left;
      const int support = static_cast<int>(coords.size());
      const int k = (m - norm) / 2;
      if ((m - norm) % 2 == 0 && std::max(1, support) + k + 1 <= d_max) {
        auto count = [&](int d) {
          std::vector<int> full(static_cast<std::size_t>(d), 0);
          std::copy(coords.begin(), coords.end(), full.begin());
          return table(d, m).at(Point(full));
        };
        ++r.degree_checked;
        try {
          const auto poly = sitepc::polynomial_in_omega(count, k, std::max(1, support));
          const bool ok = poly.degree() == k && poly.coefficients.back() > 0 && poly.coefficients.back() <= factorial;
          r.degree_failures += !ok;
        } catch (const sitepc::NotPolynomialError&) {
          ++r.degree_failures;
        }
      }
      for (int c = std::min(cap, left); c >= 1; --c) {
        auto next = coords;
        next.push_back(c);
        classes(next, left - c, c);
      }
    };
    classes({}, m, m);
  }
  return r;
}

}  // namespace oracle
