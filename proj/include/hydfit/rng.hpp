#pragma once

#include <cstdint>
#include <random>

namespace hydfit {

/// SplitMix64 finalizer. Used as the deterministic mixer for deriving
/// island and run seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a sub-seed from (seed, salt). Folding several salts in sequence
/// yields independent, reproducible streams per island / grid cell / repeat.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace hydfit
