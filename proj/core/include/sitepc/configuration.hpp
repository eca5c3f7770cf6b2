#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "sitepc/lattice.hpp"
#include "sitepc/rng.hpp"

namespace sitepc {

using SiteSet = std::unordered_set<SiteIndex>;

enum class Storage {
  automatic,  // dense up to kAutoDenseSites sites, lazy beyond
  dense,      // one bit per site, filled at construction
  lazy,       // occupancy re-derived from the counter RNG on every query
};

inline constexpr std::uint64_t kAutoDenseSites = std::uint64_t{1} << 16;

/// One site-percolation configuration on a torus.
///
/// Sampled configurations are a pure function of (geometry, p, seed, stream):
/// site i is occupied iff site_uniform(stream_key(seed, stream), i) < p, so
/// dense and lazy storage agree bit for bit and configurations at p < p'
/// from the same stream are nested.
class Configuration {
 public:
  static Configuration sample(const TorusGeometry& g, double p, std::uint64_t seed, std::uint64_t stream,
                              Storage storage = Storage::automatic);
  /// Hand-built configuration: exactly the listed sites are occupied.
  static Configuration from_sites(const TorusGeometry& g, std::span<const SiteIndex> occupied);
  static Configuration from_points(const TorusGeometry& g, std::span<const Point> occupied);

  const TorusGeometry& geometry() const { return geometry_; }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  bool is_dense() const { return dense_; }
  bool is_sampled() const { return sampled_; }

  bool occupied(SiteIndex i) const {
    if (dense_) return (bits_[i >> 6] >> (i & 63)) & 1u;
    return site_uniform(key_, i) < p_;
  }
  bool occupied(const Point& x) const { return occupied(geometry_.index(x)); }

  /// Dense bit words (empty for lazy storage).
  const std::vector<std::uint64_t>& bits() const { return bits_; }
  std::uint64_t occupied_count() const;

 private:
  Configuration(const TorusGeometry& g, double p, std::uint64_t seed, std::uint64_t stream);

  TorusGeometry geometry_;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t key_ = 0;
  bool dense_ = false;
  bool sampled_ = false;
  std::vector<std::uint64_t> bits_;
};

}  // namespace sitepc
