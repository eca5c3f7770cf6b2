#include "sitepc/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "sitepc/errors.hpp"

namespace sitepc {

namespace {

void check_budget(std::size_t visited, const Constraints& k) {
  if (visited > k.visit_budget) {
    throw ResourceError("connectivity query visited more than " + std::to_string(k.visit_budget) + " sites");
  }
}

}  // namespace

std::optional<int> chemical_distance(const Configuration& c, SiteIndex u, SiteIndex x, const Constraints& k) {
  if (u == x) return std::nullopt;
  const TorusGeometry& g = c.geometry();
  SiteSet visited{u};
  std::vector<SiteIndex> frontier{u}, next;
  int depth = 0;
  while (!frontier.empty()) {
    next.clear();
    for (SiteIndex v : frontier) {
      for (int dir = 0; dir < g.degree(); ++dir) {
        const SiteIndex w = g.neighbor(v, dir);
        if (w == x) return depth + 1;
        if (!visited.insert(w).second) continue;
        if (usable_interior(c, w, k)) next.push_back(w);
      }
    }
    check_budget(visited.size(), k);
    frontier.swap(next);
    ++depth;
  }
  return std::nullopt;
}

std::vector<SiteIndex> shortest_path(const Configuration& c, SiteIndex u, SiteIndex x, const Constraints& k) {
  if (u == x) return {};
  const TorusGeometry& g = c.geometry();
  std::unordered_map<SiteIndex, SiteIndex> parent{{u, u}};
  std::deque<SiteIndex> queue{u};
  while (!queue.empty()) {
    const SiteIndex v = queue.front();
    queue.pop_front();
    for (int dir = 0; dir < g.degree(); ++dir) {
      const SiteIndex w = g.neighbor(v, dir);
      if (w == x) {
        std::vector<SiteIndex> path{x};
        for (SiteIndex y = v; y != u; y = parent.at(y)) path.push_back(y);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!parent.emplace(w, v).second) continue;
      if (usable_interior(c, w, k)) queue.push_back(w);
    }
    check_budget(parent.size(), k);
  }
  return {};
}

bool connected(const Configuration& c, SiteIndex u, SiteIndex x, const Constraints& k) {
  return chemical_distance(c, u, x, k).has_value();
}

bool connected(const Configuration& c, const Point& u, const Point& x, const SiteSet* removed) {
  const TorusGeometry& g = c.geometry();
  Constraints k;
  k.removed = removed;
  return connected(c, g.index(u), g.index(x), k);
}

SiteSet interior_component(const Configuration& c, SiteIndex u, const Constraints& k) {
  const TorusGeometry& g = c.geometry();
  SiteSet seen{u};
  SiteSet component;
  std::vector<SiteIndex> stack{u};
  while (!stack.empty()) {
    const SiteIndex v = stack.back();
    stack.pop_back();
    for (int dir = 0; dir < g.degree(); ++dir) {
      const SiteIndex w = g.neighbor(v, dir);
      if (!seen.insert(w).second) continue;
      if (usable_interior(c, w, k)) {
        component.insert(w);
        stack.push_back(w);
      }
    }
    check_budget(seen.size(), k);
  }
  return component;
}

SiteSet reachable_set(const Configuration& c, SiteIndex u, const Constraints& k) {
  const TorusGeometry& g = c.geometry();
  SiteSet out = interior_component(c, u, k);
  std::vector<SiteIndex> members(out.begin(), out.end());
  members.push_back(u);
  for (SiteIndex v : members) {
    for (int dir = 0; dir < g.degree(); ++dir) out.insert(g.neighbor(v, dir));
  }
  out.erase(u);
  return out;
}

SiteSet cluster(const Configuration& c, SiteIndex x) {
  SiteSet out = interior_component(c, x);
  out.insert(x);
  return out;
}

namespace {

// Unit-capacity flow on the split graph of one interior component.
class SplitGraphFlow {
 public:
  SplitGraphFlow(const TorusGeometry& g, SiteIndex u, SiteIndex x, const std::vector<SiteIndex>& interior,
                 const std::unordered_map<SiteIndex, std::size_t>& slot) {
    const std::size_t n = 2 + 2 * interior.size();
    adj_.resize(n);
    for (std::size_t j = 0; j < interior.size(); ++j) {
      const SiteIndex v = interior[j];
      if (v == x) continue;
      add_edge(in(j), out(j));
      for (int dir = 0; dir < g.degree(); ++dir) {
        const SiteIndex w = g.neighbor(v, dir);
        if (w == x) {
          add_edge(out(j), kSink);
        } else if (w == u) {
          add_edge(kSource, in(j));
        } else if (auto it = slot.find(w); it != slot.end() && w != x) {
          add_edge(out(j), in(it->second));
        }
      }
    }
  }

  int run(int limit) {
    int flow = 0;
    std::vector<std::pair<std::size_t, std::size_t>> via(adj_.size());
    std::vector<char> seen(adj_.size());
    while (flow < limit) {
      std::fill(seen.begin(), seen.end(), 0);
      std::deque<std::size_t> queue{kSource};
      seen[kSource] = 1;
      while (!queue.empty() && !seen[kSink]) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < adj_[v].size(); ++e) {
          const Edge& edge = adj_[v][e];
          if (edge.cap > 0 && !seen[edge.to]) {
            seen[edge.to] = 1;
            via[edge.to] = {v, e};
            queue.push_back(edge.to);
          }
        }
      }
      if (!seen[kSink]) break;
      for (std::size_t v = kSink; v != kSource;) {
        auto [prev, e] = via[v];
        Edge& edge = adj_[prev][e];
        edge.cap -= 1;
        adj_[v][edge.rev].cap += 1;
        v = prev;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Edge {
    std::size_t to;
    int cap;
    std::size_t rev;
  };
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;
  static std::size_t in(std::size_t j) { return 2 + 2 * j; }
  static std::size_t out(std::size_t j) { return 3 + 2 * j; }

  void add_edge(std::size_t a, std::size_t b) {
    adj_[a].push_back({b, 1, adj_[b].size()});
    adj_[b].push_back({a, 0, adj_[a].size() - 1});
  }

  std::vector<std::vector<Edge>> adj_;
};

struct ComponentIndex {
  std::vector<SiteIndex> sites;
  std::unordered_map<SiteIndex, std::size_t> slot;

  explicit ComponentIndex(const SiteSet& component) : sites(component.begin(), component.end()) {
    std::sort(sites.begin(), sites.end());
    slot.reserve(sites.size());
    for (std::size_t j = 0; j < sites.size(); ++j) slot.emplace(sites[j], j);
  }
};

}  // namespace

int disjoint_paths(const Configuration& c, SiteIndex u, SiteIndex x, int limit) {
  if (u == x || limit <= 0) return 0;
  const TorusGeometry& g = c.geometry();
  if (g.distance(u, x) == 1) return limit;
  const ComponentIndex comp(interior_component(c, u));
  return SplitGraphFlow(g, u, x, comp.sites, comp.slot).run(limit);
}

bool doubly_connected(const Configuration& c, SiteIndex u, SiteIndex x) { return disjoint_paths(c, u, x, 2) >= 2; }

std::vector<SiteIndex> doubly_connected_set(const Configuration& c, SiteIndex u, int radius) {
  const TorusGeometry& g = c.geometry();
  const SiteSet component = interior_component(c, u);
  const ComponentIndex comp(component);
  SiteSet candidates = component;
  for (SiteIndex v : comp.sites) {
    for (int dir = 0; dir < g.degree(); ++dir) candidates.insert(g.neighbor(v, dir));
  }
  for (int dir = 0; dir < g.degree(); ++dir) candidates.insert(g.neighbor(u, dir));
  candidates.erase(u);

  std::vector<SiteIndex> out;
  for (SiteIndex x : candidates) {
    const int dist = g.distance(u, x);
    if (dist > radius) continue;
    if (dist == 1 || SplitGraphFlow(g, u, x, comp.sites, comp.slot).run(2) >= 2) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LongPathSearch {
  const Configuration& c;
  SiteIndex target;
  int min_edges;
  std::size_t budget;
  std::size_t states = 0;
  std::vector<SiteIndex> path;

  bool run(SiteIndex v, int edges) {
    if (++states > budget) throw ResourceError("long-path search exceeded its state budget");
    const TorusGeometry& g = c.geometry();
    for (int dir = 0; dir < g.degree(); ++dir) {
      const SiteIndex w = g.neighbor(v, dir);
      if (w == target) {
        if (edges + 1 >= min_edges) return true;
        continue;
      }
      if (std::find(path.begin(), path.end(), w) != path.end() || !c.occupied(w)) continue;
      path.push_back(w);
      if (run(w, edges + 1)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

bool long_path_connected(const Configuration& c, SiteIndex u, SiteIndex x, int min_edges, std::size_t budget) {
  if (u == x) return false;
  LongPathSearch search{c, x, min_edges, budget, 0, {u}};
  return search.run(u, 0);
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  if (n > 0xfffffffeu) throw ResourceError("union-find supports at most 2^32 - 2 elements");
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
}

std::uint32_t UnionFind::find(std::uint32_t i) {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

std::vector<std::uint32_t> cluster_labels(const Configuration& c) {
  if (!c.is_dense()) throw DomainError("cluster labelling needs dense storage");
  const TorusGeometry& g = c.geometry();
  const std::size_t n = static_cast<std::size_t>(g.size());
  UnionFind uf(n);
  for (SiteIndex i = 0; i < n; ++i) {
    if (!c.occupied(i)) continue;
    for (int axis = 0; axis < g.d(); ++axis) {
      const SiteIndex j = g.neighbor(i, 2 * axis + 1);
      if (c.occupied(j)) uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  std::vector<std::uint32_t> labels(n, kVacantLabel);
  for (SiteIndex i = 0; i < n; ++i) {
    if (c.occupied(i)) labels[i] = uf.find(static_cast<std::uint32_t>(i));
  }
  return labels;
}

}  // namespace sitepc
