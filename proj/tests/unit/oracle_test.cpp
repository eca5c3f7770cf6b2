// Library routines against the brute-force oracles at unit-test scale. The
// acceptance binary runs the same oracles on the full windows.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sitepc/connectivity.hpp"
#include "sitepc/lace.hpp"

using namespace sitepc;

TEST(Oracle, UnionFindMatchesBfs) {
  const auto t = oracle::union_find_random(120, 5);
  EXPECT_EQ(t.checked, 120u);
  EXPECT_EQ(t.mismatches, 0u);
}

TEST(Oracle, PivotalMatchesPerVertexOnSmallWindows) {
  for (auto t : {oracle::pivotal_window(2, 8, {3, 4}), oracle::pivotal_window(3, 6, {2, 2, 3})}) {
    EXPECT_GT(t.checked, 0u);
    EXPECT_EQ(t.mismatches, 0u);
  }
}

TEST(Oracle, MaxFlowMatchesPathPairsOnSmallWindows) {
  for (auto t : {oracle::double_connection_window(2, 8, {3, 4}), oracle::double_connection_window(3, 6, {2, 2, 3})}) {
    EXPECT_GT(t.checked, 0u);
    EXPECT_EQ(t.mismatches, 0u);
  }
}

TEST(Oracle, WindowPathsOfSquare) {
  // A 2x2 window: from a corner to the opposite corner there are two paths.
  const oracle::Window w(2, 8, {2, 2});
  EXPECT_EQ(w.path_interiors(0, 3).size(), 2u);
  EXPECT_EQ(w.path_interiors(0, 1).size(), 2u);  // direct edge and the 3-edge detour
}

TEST(Oracle, BallEngineMatchesLibrary) {
  // The Observation 4.3 engine decides E' and long paths with bit masks; pin it
  // to the library on random occupancies and random (u, v) pairs in the ball.
  const oracle::BallEngine e;
  const TorusGeometry g(3, 8);
  const sitepc::ThickenedSet a(g, SiteSet{g.origin()});
  std::uint32_t thick = 1u << e.slot({0, 0, 0});
  thick |= e.adj[static_cast<std::size_t>(e.slot({0, 0, 0}))];
  std::mt19937_64 rng(77);
  const int n = static_cast<int>(e.points.size());
  int events = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (v == u) v = (v + 1) % n;
    const double p = 0.4 + 0.5 * static_cast<double>(trial % 3) / 2.0;
    std::uint32_t occ = 0;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      if (i != u && std::uniform_real_distribution<double>(0, 1)(rng) < p) {
        occ |= 1u << i;
        pts.push_back(e.points[static_cast<std::size_t>(i)]);
      }
    }
    const auto c = Configuration::from_points(g, pts);
    const SiteIndex us = g.index(e.points[static_cast<std::size_t>(u)]);
    const SiteIndex vs = g.index(e.points[static_cast<std::size_t>(v)]);
    const bool ep = e.eprime(u, v, occ, thick);
    events += ep;
    ASSERT_EQ(ep, eprime(c, us, vs, a)) << trial;
    ASSERT_EQ(e.long_path(u, v, occ, 4), long_path_connected(c, us, vs, 4)) << trial;
  }
  EXPECT_GT(events, 100);
}

TEST(Oracle, WrapAxesOfAStraightLine) {
  const TorusGeometry g(2, 6);
  std::vector<Point> row;
  for (int x = -3; x < 3; ++x) row.push_back({x, 1});
  const auto c = Configuration::from_points(g, row);
  EXPECT_EQ(oracle::bfs_wrap_axes(c, g.index({0, 1})), 1u);
  EXPECT_EQ(oracle::bfs_wrap_axes(c, g.index({0, 0})), 0u);
}

TEST(Oracle, WalkStructureSmall) {
  const auto r = oracle::walk_structure(6, 5);
  EXPECT_GT(r.parity_checked, 1000u);
  EXPECT_EQ(r.parity_failures, 0u);
  EXPECT_GT(r.degree_checked, 10u);
  EXPECT_EQ(r.degree_failures, 0u);
}
