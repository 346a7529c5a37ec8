#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <random>

namespace oal {

/// splitmix64 finalizer (Vigna). Bijective avalanche on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) noexcept {
  return seed ^ (mix64(value) + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2));
}

/// Folds a tuple of stream indices into a master seed. Every (master, parts...)
/// tuple maps to a stable substream seed, so work units can be executed in any
/// order, on any number of threads, with bit-identical results.
template <std::integral... Parts>
constexpr std::uint64_t derive_seed(std::uint64_t master, Parts... parts) noexcept {
  std::uint64_t s = mix64(master);
  ((s = hash_combine(s, static_cast<std::uint64_t>(parts))), ...);
  return mix64(s);
}

/// Deterministic random stream: a std::mt19937_64 engine (bit-exact output is
/// pinned by the standard) with hand-rolled double conversions, so draws do not
/// depend on the standard library's unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller. Consumes exactly two engine outputs.
  double normal() {
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oal
