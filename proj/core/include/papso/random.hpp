#pragma once

#include <cstdint>
#include <random>

namespace papso {

using Rng = std::mt19937_64;

/// Uniform draw in [0, 1) with 53 bits of resolution. Independent of the
/// standard library's distribution implementation, so streams are portable.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Sub-streams of a run seed. Each component draws from its own stream so
/// that enabling or disabling one stage leaves the others untouched.
enum class Stream : std::uint64_t {
  Initialization = 1,
  Dynamics = 2,
  SelfTuning = 3,
  Sampling = 4,
};

inline Rng make_stream(std::uint64_t seed, Stream stream) {
  return Rng{splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(stream))};
}

}  // namespace papso
