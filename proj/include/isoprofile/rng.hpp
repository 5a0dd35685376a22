#pragma once

#include <cstdint>
#include <random>

namespace isoprofile {

/// SplitMix64 finalizer. Used as a stateless counter-based generator: the
/// k-th output of stream `seed` is mix64(seed + (k + 1) * golden).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
  return mix64(seed + (counter + 1) * kGoldenGamma);
}

/// Seed for an independent sub-stream; schedule-independent by construction.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return mix64(mix64(root) ^ (stream * kGoldenGamma + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) without modulo bias (Lemire's method).
/// std::uniform_int_distribution is implementation-defined, which would make
/// outputs differ between standard libraries.
template <class Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  std::uint64_t x = eng();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = eng();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

template <class Engine>
double uniform_unit(Engine& eng) {
  return unit_from_bits(eng());
}

using Engine = std::mt19937_64;

}  // namespace isoprofile
