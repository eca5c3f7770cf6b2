#pragma once

// Ensemble estimators for site percolation on the torus. Sample i of a run
// with master seed s uses the configuration stream (s, i), so every result
// is a function of (geometry, p, samples, seed) alone.

#include <cstdint>
#include <optional>
#include <vector>

#include "sitepc/configuration.hpp"
#include "sitepc/estimate.hpp"

namespace sitepc {
inline constexpr std::uint64_t kMaxSweepSites = std::uint64_t{1} << 26;
}

namespace sitepc {

/// Union-find over sites (at most kMaxSweepSites, else ResourceError) that tracks the unwrapped displacement of every
/// node from its root, so a cluster that closes a loop around the torus is
/// detected on the bond that closes it.
class WrappingClusters {
 public:
  explicit WrappingClusters(const TorusGeometry& g);

  /// Marks site i occupied and joins it to its occupied neighbours. Returns
  /// the wrap axes of the cluster of i afterwards.
  std::uint32_t insert(SiteIndex i);

  bool occupied(SiteIndex i) const { return occupied_[i] != 0; }
  bool wraps(SiteIndex i);
  /// Bit a set iff the cluster of i winds around axis a; 0 for vacant i.
  std::uint32_t wrap_axes(SiteIndex i);
  bool any_wraps() const { return any_wraps_; }
  std::uint32_t root(SiteIndex i) { return find(static_cast<std::uint32_t>(i)); }

 private:
  std::uint32_t find(std::uint32_t i);
  int* offset(std::uint32_t i) { return &offsets_[static_cast<std::size_t>(i) * static_cast<std::size_t>(d_)]; }

  TorusGeometry geometry_;
  int d_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<int> offsets_;  // position(node) - position(parent), per axis
  std::vector<std::uint8_t> occupied_;
  std::vector<std::uint32_t> wraps_;
  std::vector<std::uint32_t> path_;
  bool any_wraps_ = false;
};

/// Site insertion order of stream (seed, stream): ascending site uniform, so
/// the first k sites are exactly the occupied set at any p between the k-th
/// and (k+1)-th uniform.
std::vector<SiteIndex> insertion_order(const TorusGeometry& g, std::uint64_t seed, std::uint64_t stream);

/// Number of insertions after which some cluster first winds around axis 0.
std::uint64_t first_wrap_count(const TorusGeometry& g, std::uint64_t seed, std::uint64_t stream);

/// The origin's cluster wraps in the configuration (g, p, seed, stream). For a
/// vacant origin this means one of the clusters it touches wraps.
bool origin_wraps(const TorusGeometry& g, double p, std::uint64_t seed, std::uint64_t stream);

struct RunOptions {
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Mean of first_wrap_count / L^d over samples.
Estimate estimate_pc(const TorusGeometry& g, const RunOptions& run);
/// Frequency of origin_wraps.
Estimate estimate_theta(const TorusGeometry& g, double p, const RunOptions& run);

enum class ChemVariant { plain, at_least, at_most, exactly };

/// {0 <-> x} with an optional constraint on the chemical distance.
bool two_point_event(const Configuration& c, SiteIndex x, ChemVariant variant, int l);
Estimate two_point(const TorusGeometry& g, const Point& x, double p, ChemVariant variant, int l,
                   const RunOptions& run);

/// Frequency of {0 <=> x}.
Estimate double_connection(const TorusGeometry& g, const Point& x, double p, const RunOptions& run);

/// Expected number of sites connected to the origin, sum_x tau_p(x).
Estimate expected_reach(const TorusGeometry& g, double p, const RunOptions& run);

}  // namespace sitepc
