#include "sitepc/percolation.hpp"

#include <algorithm>
#include <numeric>

#include "sitepc/connectivity.hpp"
#include "sitepc/errors.hpp"
#include "sitepc/parallel.hpp"

namespace sitepc {

WrappingClusters::WrappingClusters(const TorusGeometry& g) : geometry_(g), d_(g.d()) {
  if (g.d() > 32) throw ResourceError("wrapping clusters support d <= 32");
  if (g.size() > kMaxSweepSites) {
    throw ResourceError("wrapping clusters support at most " + std::to_string(kMaxSweepSites) + " sites");
  }
  const std::size_t n = static_cast<std::size_t>(g.size());
  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), 0u);
  size_.assign(n, 1);
  offsets_.assign(n * static_cast<std::size_t>(d_), 0);
  occupied_.assign(n, 0);
  wraps_.assign(n, 0);
}

std::uint32_t WrappingClusters::find(std::uint32_t i) {
  path_.clear();
  while (parent_[i] != i) {
    path_.push_back(i);
    i = parent_[i];
  }
  const std::uint32_t root = i;
  // Walk back from the node nearest the root, turning offsets to the parent
  // into offsets to the root.
  for (std::size_t k = path_.size(); k-- > 0;) {
    const std::uint32_t node = path_[k];
    const std::uint32_t parent = parent_[node];
    if (parent != root) {
      int* a = offset(node);
      const int* b = offset(parent);
      for (int axis = 0; axis < d_; ++axis) a[axis] += b[axis];
      parent_[node] = root;
    }
  }
  return root;
}

std::uint32_t WrappingClusters::insert(SiteIndex site) {
  const auto i = static_cast<std::uint32_t>(site);
  if (occupied_[i]) return wrap_axes(site);
  occupied_[i] = 1;
  std::vector<int> rel(static_cast<std::size_t>(d_));
  for (int dir = 0; dir < geometry_.degree(); ++dir) {
    const auto n = static_cast<std::uint32_t>(geometry_.neighbor(site, dir));
    if (!occupied_[n]) continue;
    std::uint32_t ri = find(i);
    std::uint32_t rn = find(n);
    const int* di = offset(i);
    const int* dn = offset(n);
    const int axis = dir >> 1;
    // rel = position(rn) - position(ri), given position(n) - position(i) = step.
    for (int a = 0; a < d_; ++a) rel[static_cast<std::size_t>(a)] = di[a] - dn[a] + (a == axis ? ((dir & 1) ? 1 : -1) : 0);
    if (ri == rn) {
      std::uint32_t axes = 0;
      for (int a = 0; a < d_; ++a) {
        if (rel[static_cast<std::size_t>(a)] != 0) axes |= std::uint32_t{1} << a;
      }
      if (axes != 0) {
        wraps_[ri] |= axes;
        any_wraps_ = true;
      }
      continue;
    }
    if (size_[ri] < size_[rn]) {
      std::swap(ri, rn);
      for (int& v : rel) v = -v;
    }
    parent_[rn] = ri;
    size_[ri] += size_[rn];
    std::copy(rel.begin(), rel.end(), offset(rn));
    wraps_[ri] |= wraps_[rn];
  }
  return wraps_[find(i)];
}

bool WrappingClusters::wraps(SiteIndex i) { return wrap_axes(i) != 0; }

std::uint32_t WrappingClusters::wrap_axes(SiteIndex i) {
  return occupied_[i] ? wraps_[find(static_cast<std::uint32_t>(i))] : 0;
}

std::vector<SiteIndex> insertion_order(const TorusGeometry& g, std::uint64_t seed, std::uint64_t stream) {
  const std::uint64_t key = stream_key(seed, stream);
  const std::size_t n = static_cast<std::size_t>(g.size());
  std::vector<std::pair<double, SiteIndex>> keyed(n);
  for (SiteIndex i = 0; i < n; ++i) keyed[i] = {site_uniform(key, i), i};
  std::sort(keyed.begin(), keyed.end());
  std::vector<SiteIndex> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = keyed[k].second;
  return order;
}

std::uint64_t first_wrap_count(const TorusGeometry& g, std::uint64_t seed, std::uint64_t stream) {
  WrappingClusters clusters(g);
  const auto order = insertion_order(g, seed, stream);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (clusters.insert(order[k]) & 1u) return k + 1;
  }
  throw Error("no cluster winds around axis 0 after filling the torus");
}

bool origin_wraps(const TorusGeometry& g, double p, std::uint64_t seed, std::uint64_t stream) {
  const Configuration c = Configuration::sample(g, p, seed, stream, Storage::dense);
  WrappingClusters clusters(g);
  for (SiteIndex i = 0; i < g.size(); ++i) {
    if (c.occupied(i)) clusters.insert(i);
  }
  const SiteIndex o = g.origin();
  if (clusters.occupied(o)) return clusters.wraps(o);
  for (int dir = 0; dir < g.degree(); ++dir) {
    if (clusters.wraps(g.neighbor(o, dir))) return true;
  }
  return false;
}

namespace {

template <class F>
Estimate sample_mean(const RunOptions& run, F&& f) {
  if (run.samples == 0) throw DomainError("samples must be at least 1");
  const auto values = parallel_map(run.samples, run.threads, std::forward<F>(f));
  return summarize(values);
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
}

}  // namespace

Estimate estimate_pc(const TorusGeometry& g, const RunOptions& run) {
  const double n = static_cast<double>(g.size());
  return sample_mean(run, [&](std::size_t i) { return static_cast<double>(first_wrap_count(g, run.seed, i)) / n; });
}

Estimate estimate_theta(const TorusGeometry& g, double p, const RunOptions& run) {
  check_p(p);
  return sample_mean(run, [&](std::size_t i) { return origin_wraps(g, p, run.seed, i) ? 1.0 : 0.0; });
}

bool two_point_event(const Configuration& c, SiteIndex x, ChemVariant variant, int l) {
  if (x == c.geometry().origin()) throw DomainError("two-point function needs x != 0");
  if (variant != ChemVariant::plain && l < 1) throw DomainError("chemical-distance threshold must be >= 1");
  const auto dist = chemical_distance(c, c.geometry().origin(), x);
  if (!dist) return false;
  switch (variant) {
    case ChemVariant::plain:
      return true;
    case ChemVariant::at_least:
      return *dist >= l;
    case ChemVariant::at_most:
      return *dist <= l;
    case ChemVariant::exactly:
      return *dist == l;
  }
  return false;
}

Estimate two_point(const TorusGeometry& g, const Point& x, double p, ChemVariant variant, int l,
                   const RunOptions& run) {
  check_p(p);
  const SiteIndex xi = g.index(x);
  return sample_mean(run, [&](std::size_t i) {
    const Configuration c = Configuration::sample(g, p, run.seed, i);
    return two_point_event(c, xi, variant, l) ? 1.0 : 0.0;
  });
}

Estimate double_connection(const TorusGeometry& g, const Point& x, double p, const RunOptions& run) {
  check_p(p);
  const SiteIndex xi = g.index(x);
  return sample_mean(run, [&](std::size_t i) {
    const Configuration c = Configuration::sample(g, p, run.seed, i);
    return doubly_connected(c, g.origin(), xi) ? 1.0 : 0.0;
  });
}

Estimate expected_reach(const TorusGeometry& g, double p, const RunOptions& run) {
  check_p(p);
  return sample_mean(run, [&](std::size_t i) {
    const Configuration c = Configuration::sample(g, p, run.seed, i);
    return static_cast<double>(reachable_set(c, g.origin()).size());
  });
}

}  // namespace sitepc
