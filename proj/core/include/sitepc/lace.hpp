#pragma once

// Lace-expansion events and Monte Carlo estimates of the coefficients
// Pi^(n) summed over x.

#include <cstdint>
#include <vector>

#include "sitepc/configuration.hpp"
#include "sitepc/estimate.hpp"
#include "sitepc/percolation.hpp"

namespace sitepc {

/// <A>: A together with every lattice neighbour of A.
class ThickenedSet {
 public:
  ThickenedSet(const TorusGeometry& g, SiteSet source);
  /// <Z^d>, i.e. every site.
  static ThickenedSet whole_lattice(const TorusGeometry& g);

  bool contains(SiteIndex i) const { return full_ || sites_.count(i) != 0; }
  bool is_whole_lattice() const { return full_; }
  const SiteSet& sites() const { return sites_; }
  const SiteSet& source() const { return source_; }

 private:
  ThickenedSet() = default;
  SiteSet source_;
  SiteSet sites_;
  bool full_ = false;
};

/// C~^u(x): x plus the occupied sites other than u reachable from x in
/// Z^d \ {u}.
SiteSet modified_cluster(const Configuration& c, SiteIndex x, SiteIndex u);

/// {u -A-> x}: u <-> x, and either every u-x path has an interior vertex in
/// <A> or x itself is in <A>.
bool through_connection(const Configuration& c, SiteIndex u, SiteIndex x, const ThickenedSet& a);

/// Sites v such that u <-> x holds in the configuration with v occupied but
/// not with v vacant. Endpoints are never pivotal.
SiteSet pivotal_points(const Configuration& c, SiteIndex u, SiteIndex x);

/// E'(v, u; A) = {v -A-> u} and no pivotal u' of (v, u) has v -A-> u'.
bool eprime(const Configuration& c, SiteIndex v, SiteIndex u, const ThickenedSet& a);

/// Every u with E'(v, u; A), sorted. Same result as testing eprime() on each
/// site reachable from v, but built on one local graph of v's reachable set:
/// pivotal sites come from one removal search per occupied site of that set.
std::vector<SiteIndex> eprime_targets(const Configuration& c, SiteIndex v, const ThickenedSet& a);

/// Stream of configuration omega_i of sample `sample` in a Pi^(n) run.
constexpr std::uint64_t lace_stream(int n, std::uint64_t sample, int i) {
  return sample * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(i);
}

struct PiSample {
  double value = 0.0;        // includes the factor p^n
  double near_origin = 0.0;  // n = 0 only: the |x| <= 1 part of the sum
};

/// One sample of sum_x Pi^(n)(x) with u_0 restricted to |u_0| <= radius.
/// Throws GeometryError unless radius <= L/2 - 1, DomainError unless n is 0, 1
/// or 2.
PiSample pi_hat_sample(const TorusGeometry& g, int n, double p, int radius, std::uint64_t seed, std::uint64_t sample);

struct PiHatResult {
  Estimate estimate;
  double max_abs_near_origin = 0.0;  // over all samples
};

PiHatResult pi_hat_estimate(const TorusGeometry& g, int n, double p, int radius, const RunOptions& run);

/// Three-term series p_c(d) = t + 5/2 t^2 + 31/4 t^3 at t = 1/(2d).
double series_pc(int d);

struct OzeResult {
  double residual = 0.0;  // |lhs - rhs| / |lhs|, 0 when both vanish
  double lhs = 0.0;       // p * E|{x : 0 <-> x}|
  double rhs = 0.0;       // (p Omega + p Pi) / (1 - p (Omega + Pi))
  double pi_hat = 0.0;    // Pi^(0) - Pi^(1) + Pi^(2)
  Estimate reach;
  Estimate pi[3];
};

/// Relative residual of p tau^(0) = (p Omega + p Pi^) / (1 - p (Omega + Pi^)).
/// Throws DomainError if p >= series_pc(d).
OzeResult oze_residual(const TorusGeometry& g, double p, int radius, const RunOptions& run);

}  // namespace sitepc
