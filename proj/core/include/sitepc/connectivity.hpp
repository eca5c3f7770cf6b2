#pragma once

// Connection events with the site-percolation convention: interior vertices
// of a path must be occupied, endpoints never need to be, a site is not
// connected to itself and neighbours are always connected.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sitepc/configuration.hpp"

namespace sitepc {

inline constexpr std::size_t kDefaultVisitBudget = 20'000'000;

/// Modifications applied to interior vertices only.
struct Constraints {
  const SiteSet* removed = nullptr;  // treated as vacant
  const SiteSet* forced = nullptr;   // treated as occupied (removed wins)
  std::size_t visit_budget = kDefaultVisitBudget;
};

inline bool usable_interior(const Configuration& c, SiteIndex v, const Constraints& k) {
  if (k.removed && k.removed->count(v)) return false;
  if (k.forced && k.forced->count(v)) return true;
  return c.occupied(v);
}

/// Length of the shortest u-x path with usable interior, if any.
std::optional<int> chemical_distance(const Configuration& c, SiteIndex u, SiteIndex x, const Constraints& k = {});

/// One shortest u-x path [u, ..., x] with usable interior; empty if none.
std::vector<SiteIndex> shortest_path(const Configuration& c, SiteIndex u, SiteIndex x, const Constraints& k = {});

bool connected(const Configuration& c, SiteIndex u, SiteIndex x, const Constraints& k = {});
bool connected(const Configuration& c, const Point& u, const Point& x, const SiteSet* removed = nullptr);

/// Usable interior sites reachable from u (u itself excluded).
SiteSet interior_component(const Configuration& c, SiteIndex u, const Constraints& k = {});
/// Every y != u with u <-> y.
SiteSet reachable_set(const Configuration& c, SiteIndex u, const Constraints& k = {});
/// The cluster {x} plus occupied sites connected to x.
SiteSet cluster(const Configuration& c, SiteIndex x);

/// Vertex-capacity max flow from u to x, capped at `limit`: the number of
/// u-x paths with pairwise disjoint occupied interiors. Adjacent u, x
/// return `limit`; u == x returns 0.
int disjoint_paths(const Configuration& c, SiteIndex u, SiteIndex x, int limit = 2);
/// u <=> x.
bool doubly_connected(const Configuration& c, SiteIndex u, SiteIndex x);

/// All x != u within torus distance `radius` of u with u <=> x, sorted.
/// Runs one flow per candidate on a shared local graph of u's component.
std::vector<SiteIndex> doubly_connected_set(const Configuration& c, SiteIndex u, int radius);

/// Exists a self-avoiding u-x path with at least `min_edges` edges and
/// occupied interior. Exhaustive DFS; throws ResourceError past `budget`
/// explored states.
bool long_path_connected(const Configuration& c, SiteIndex u, SiteIndex x, int min_edges,
                         std::size_t budget = 5'000'000);

/// Disjoint-set forest with path halving and union by rank.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::uint32_t find(std::uint32_t i);
  /// Returns false when already joined.
  bool unite(std::uint32_t a, std::uint32_t b);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

inline constexpr std::uint32_t kVacantLabel = 0xffffffffu;

/// Root label per site from union-find over occupied nearest neighbours;
/// kVacantLabel for vacant sites. Dense configurations only.
std::vector<std::uint32_t> cluster_labels(const Configuration& c);

}  // namespace sitepc
