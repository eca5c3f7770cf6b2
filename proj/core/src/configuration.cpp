#include "sitepc/configuration.hpp"

#include <bit>

#include "sitepc/errors.hpp"

namespace sitepc {

Configuration::Configuration(const TorusGeometry& g, double p, std::uint64_t seed, std::uint64_t stream)
    : geometry_(g), p_(p), seed_(seed), stream_(stream), key_(stream_key(seed, stream)) {}

Configuration Configuration::sample(const TorusGeometry& g, double p, std::uint64_t seed, std::uint64_t stream,
                                    Storage storage) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("occupation probability must lie in [0, 1]");
  Configuration c(g, p, seed, stream);
  c.sampled_ = true;
  const bool dense = storage == Storage::dense || (storage == Storage::automatic && g.size() <= kAutoDenseSites);
  if (dense) {
    if (g.size() > (std::uint64_t{1} << 34)) throw ResourceError("torus too large for dense storage");
    c.bits_.assign((g.size() + 63) / 64, 0);
    for (SiteIndex i = 0; i < g.size(); ++i) {
      if (site_uniform(c.key_, i) < p) c.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    c.dense_ = true;
  }
  return c;
}

Configuration Configuration::from_sites(const TorusGeometry& g, std::span<const SiteIndex> occupied) {
  if (g.size() > (std::uint64_t{1} << 34)) throw ResourceError("torus too large for dense storage");
  Configuration c(g, 0.0, 0, 0);
  c.bits_.assign((g.size() + 63) / 64, 0);
  for (SiteIndex i : occupied) {
    if (i >= g.size()) throw GeometryError("site index out of range");
    c.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  c.dense_ = true;
  return c;
}

Configuration Configuration::from_points(const TorusGeometry& g, std::span<const Point> occupied) {
  std::vector<SiteIndex> sites;
  sites.reserve(occupied.size());
  for (const auto& x : occupied) sites.push_back(g.index(x));
  return from_sites(g, sites);
}

std::uint64_t Configuration::occupied_count() const {
  if (!dense_) throw DomainError("occupied_count needs dense storage");
  std::uint64_t n = 0;
  for (auto w : bits_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

}  // namespace sitepc
