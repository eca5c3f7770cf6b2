#pragma once

#include <cstdint>

namespace sitepc {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Key of one (seed, stream) pair; streams of one seed are independent.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream ^ 0x6a09e667f3bcc909ull));
}

/// Counter-based uniform in [0, 1) for one site of one stream.
constexpr double site_uniform(std::uint64_t key, std::uint64_t site) {
  const std::uint64_t h = mix64(key + mix64(site));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace sitepc
