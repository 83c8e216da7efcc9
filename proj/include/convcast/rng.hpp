#pragma once

#include <cstdint>
#include <string_view>

namespace convcast {

/// splitmix64 mixing step; used to derive independent sub-seeds from one
/// documented 64-bit master seed.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-component seed: master seed mixed with an FNV-1a hash
/// of the component tag.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return splitmix64(seed ^ h);
}

}  // namespace convcast
