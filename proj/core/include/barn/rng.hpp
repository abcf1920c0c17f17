#pragma once

#include <cstdint>
#include <random>

// Deterministic random-number plumbing.
//
// Everything that needs randomness draws from std::mt19937_64 (the engine
// itself is pinned by the standard, so streams are identical on every
// platform) through the helpers below instead of std::uniform_*_distribution,
// whose draw counts are implementation-defined.  Golden files and manifest
// bytes depend on these exact draw sequences; do not change them.

namespace barn {

// splitmix64 finalizer.  Used to derive well-separated child seeds from a
// master seed plus stream/index tags.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Child seed for (stream, index) under a master seed.  stream tags keep the
// generation / endpoint / benchmark / training draws independent.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = splitmix64(master ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  return splitmix64(z ^ (0xBF58476D1CE4E5B9ULL * (index + 1)));
}

// Uniform double in [0, 1) from exactly one engine draw (53 mantissa bits).
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, n).  Lemire's multiply-shift with the
// rejection fix; one engine draw in the common case.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (lo < threshold) {
      m = static_cast<unsigned __int128>(rng()) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace barn
