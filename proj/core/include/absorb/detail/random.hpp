#pragma once

#include <cstdint>
#include <random>

namespace absorb::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for sample block `stream` under `seed`. Blocks
/// are fixed-size, so the samples do not depend on the worker count.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

/// Uniform value in [0, n); plain modulo keeps the stream identical across
/// standard libraries.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline constexpr std::uint64_t kSampleBlock = 4096;

}  // namespace absorb::detail
