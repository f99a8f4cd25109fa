#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sarp {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Hierarchical seed split: child = mix64(parent ^ fnv1a64(label)).
/// Every stochastic component derives its stream from the master seed
/// through a chain of labels, e.g. derive_seed(derive_seed(m, "nav"), "demos").
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view label) {
  return mix64(parent ^ fnv1a64(label));
}

/// Indexed split, used for per-trial streams: mix64(parent + mix64(index)).
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return mix64(parent + mix64(index + 1));
}

}  // namespace sarp
