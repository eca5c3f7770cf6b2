#include "sitepc/lace.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "sitepc/connectivity.hpp"
#include "sitepc/errors.hpp"
#include "sitepc/parallel.hpp"
#include "sitepc/series.hpp"

namespace sitepc {

ThickenedSet::ThickenedSet(const TorusGeometry& g, SiteSet source) : source_(std::move(source)) {
  sites_ = source_;
  for (SiteIndex v : source_) {
    for (int dir = 0; dir < g.degree(); ++dir) sites_.insert(g.neighbor(v, dir));
  }
}

ThickenedSet ThickenedSet::whole_lattice(const TorusGeometry&) {
  ThickenedSet t;
  t.full_ = true;
  return t;
}

SiteSet modified_cluster(const Configuration& c, SiteIndex x, SiteIndex u) {
  const SiteSet removed{u};
  Constraints k;
  k.removed = &removed;
  SiteSet out = interior_component(c, x, k);
  out.insert(x);
  return out;
}

bool through_connection(const Configuration& c, SiteIndex u, SiteIndex x, const ThickenedSet& a) {
  if (!connected(c, u, x)) return false;
  if (a.contains(x)) return true;
  Constraints k;
  k.removed = &a.sites();
  return !connected(c, u, x, k);
}

SiteSet pivotal_points(const Configuration& c, SiteIndex u, SiteIndex x) {
  SiteSet out;
  if (u == x) return out;
  const auto path = shortest_path(c, u, x);
  if (path.empty()) {
    // Forcing v occupied connects u and x exactly when v is reachable from both.
    const SiteSet from_u = reachable_set(c, u);
    for (SiteIndex v : reachable_set(c, x)) {
      if (v != u && from_u.count(v)) out.insert(v);
    }
    return out;
  }
  // Every pivotal site lies on every u-x path, in particular on this one.
  SiteSet removed;
  Constraints k;
  k.removed = &removed;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    removed = {path[i]};
    if (!connected(c, u, x, k)) out.insert(path[i]);
  }
  return out;
}

bool eprime(const Configuration& c, SiteIndex v, SiteIndex u, const ThickenedSet& a) {
  if (!through_connection(c, v, u, a)) return false;
  for (SiteIndex w : pivotal_points(c, v, u)) {
    if (through_connection(c, v, w, a)) return false;
  }
  return true;
}

namespace {

void check_lace_args(const TorusGeometry& g, int n, double p, int radius) {
  if (n < 0 || n > 2) throw DomainError("lace coefficients are available for n in {0, 1, 2}");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (radius < 0) throw DomainError("radius must be nonnegative");
  if (radius > g.L() / 2 - 1) {
    throw GeometryError("radius " + std::to_string(radius) + " needs L >= " + std::to_string(2 * radius + 2));
  }
}

}  // namespace

std::vector<SiteIndex> eprime_targets(const Configuration& c, SiteIndex v, const ThickenedSet& a) {
  const TorusGeometry& g = c.geometry();
  // Local graph: v (node 0), the occupied sites reachable from v and their
  // neighbours. No search from v can leave it.
  std::vector<SiteIndex> nodes{v};
  std::unordered_map<SiteIndex, std::uint32_t> slot{{v, 0}};
  std::vector<char> usable{0};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (head > 0 && !usable[head]) continue;
    for (int dir = 0; dir < g.degree(); ++dir) {
      const SiteIndex w = g.neighbor(nodes[head], dir);
      if (slot.emplace(w, static_cast<std::uint32_t>(nodes.size())).second) {
        nodes.push_back(w);
        usable.push_back(c.occupied(w) ? 1 : 0);
      }
    }
    if (nodes.size() > kDefaultVisitBudget) throw ResourceError("E' scan exceeded its visit budget");
  }
  const std::size_t n = nodes.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !usable[i]) continue;
    for (int dir = 0; dir < g.degree(); ++dir) {
      const auto it = slot.find(g.neighbor(nodes[i], dir));
      if (it != slot.end()) adj[i].push_back(it->second);
    }
  }

  // reached[j] after search(blocked): j reachable from v with interiors
  // usable and not blocked.
  std::vector<char> reached(n);
  std::vector<std::uint32_t> queue;
  auto search = [&](const std::vector<char>& blocked) {
    std::fill(reached.begin(), reached.end(), 0);
    reached[0] = 1;
    queue.assign(1, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint32_t w : adj[queue[head]]) {
        if (reached[w]) continue;
        reached[w] = 1;
        if (usable[w] && !blocked[w]) queue.push_back(w);
      }
    }
  };

  std::vector<char> in_a(n);
  for (std::size_t i = 0; i < n; ++i) in_a[i] = a.contains(nodes[i]) ? 1 : 0;
  std::vector<char> through(n, 0);
  if (a.is_whole_lattice()) {
    std::fill(through.begin(), through.end(), 1);
  } else {
    search(in_a);
    for (std::size_t i = 1; i < n; ++i) through[i] = in_a[i] || !reached[i];
  }

  // bad[j]: some pivotal site of (v, j) is itself reached through <A>.
  std::vector<char> bad(n, 0), blocked(n, 0);
  for (std::size_t w = 1; w < n; ++w) {
    if (!usable[w] || !through[w]) continue;
    blocked[w] = 1;
    search(blocked);
    blocked[w] = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (j != w && !reached[j]) bad[j] = 1;
    }
  }

  std::vector<SiteIndex> out;
  for (std::size_t j = 1; j < n; ++j) {
    if (through[j] && !bad[j]) out.push_back(nodes[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PiSample pi_hat_sample(const TorusGeometry& g, int n, double p, int radius, std::uint64_t seed, std::uint64_t sample) {
  check_lace_args(g, n, p, radius);
  const SiteIndex o = g.origin();
  const Configuration w0 = Configuration::sample(g, p, seed, lace_stream(n, sample, 0));
  const auto doubly = doubly_connected_set(w0, o, radius);
  PiSample out;
  if (n == 0) {
    double near = 0.0;
    for (SiteIndex x : doubly) {
      if (g.norm(x) <= 1) near += 1.0;
    }
    near -= static_cast<double>(g.degree());
    out.near_origin = near;
    out.value = static_cast<double>(doubly.size()) - static_cast<double>(g.degree());
    return out;
  }

  const Configuration w1 = Configuration::sample(g, p, seed, lace_stream(n, sample, 1));
  std::optional<Configuration> w2;
  if (n == 2) w2 = Configuration::sample(g, p, seed, lace_stream(n, sample, 2));
  std::uint64_t count = 0;
  for (SiteIndex u0 : doubly) {
    const ThickenedSet a0(g, modified_cluster(w0, o, u0));
    const auto targets = eprime_targets(w1, u0, a0);
    if (n == 1) {
      count += targets.size();
      continue;
    }
    for (SiteIndex u1 : targets) {
      const ThickenedSet a1(g, modified_cluster(w1, u0, u1));
      count += eprime_targets(*w2, u1, a1).size();
    }
  }
  out.value = std::pow(p, n) * static_cast<double>(count);
  return out;
}

PiHatResult pi_hat_estimate(const TorusGeometry& g, int n, double p, int radius, const RunOptions& run) {
  check_lace_args(g, n, p, radius);
  if (run.samples == 0) throw DomainError("samples must be at least 1");
  const auto samples = parallel_map(run.samples, run.threads,
                                    [&](std::size_t i) { return pi_hat_sample(g, n, p, radius, run.seed, i); });
  RunningStats stats;
  PiHatResult r;
  for (const auto& s : samples) {
    stats.add(s.value);
    r.max_abs_near_origin = std::max(r.max_abs_near_origin, std::abs(s.near_origin));
  }
  r.estimate = stats.estimate();
  return r;
}

double series_pc(int d) {
  const auto solution = solve_pc_fixed_point(lace_coefficient_expansions(), 2);
  return evaluate_series(solution.pc(), d).convert_to<double>();
}

OzeResult oze_residual(const TorusGeometry& g, double p, int radius, const RunOptions& run) {
  if (!(p >= 0.0)) throw DomainError("p must be nonnegative");
  const double pc = series_pc(g.d());
  if (p >= pc) throw DomainError("oze needs p below the series estimate p_c(d) = " + std::to_string(pc));
  OzeResult r;
  r.reach = expected_reach(g, p, run);
  for (int n = 0; n <= 2; ++n) r.pi[n] = pi_hat_estimate(g, n, p, radius, run).estimate;
  r.pi_hat = r.pi[0].mean - r.pi[1].mean + r.pi[2].mean;
  const double omega = g.degree();
  r.lhs = p * r.reach.mean;
  r.rhs = (p * omega + p * r.pi_hat) / (1.0 - p * (omega + r.pi_hat));
  if (r.lhs == 0.0 && r.rhs == 0.0) {
    r.residual = 0.0;
  } else {
    r.residual = std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
  }
  return r;
}

}  // namespace sitepc
