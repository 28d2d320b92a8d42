#pragma once

#include <cstdint>
#include <random>

namespace hperc {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of trial `index` under `master`: two rounds of splitmix64 so nearby
// masters and indices give unrelated streams.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

using Rng = std::mt19937_64;

// Uniform on [0, 1) with 53 random bits. Every result is a multiple of
// 2^-53, so 1 - u is exact and complements are involutions.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace hperc
