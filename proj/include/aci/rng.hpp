#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace aci {

/// SplitMix64 finalizer; used to derive stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seeded generator with deterministic, library-independent draws.
///
/// Streams are derived, never shared: `derive(seed, trial, purpose)` gives
/// each (trial, purpose) pair its own independent engine so runs are
/// bitwise reproducible regardless of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  static Rng derive(std::uint64_t seed, std::uint64_t trial,
                    std::uint64_t purpose) {
    return Rng(mix64(mix64(seed) ^ mix64(trial + 0x51ed2701ULL) ^
                     mix64(purpose * 0x2545f4914f6cdd1dULL + 1)));
  }

  Rng split(std::uint64_t purpose) const { return derive(seed_, 0, purpose); }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  /// Standard normal via Box-Muller (one draw per call, no caching).
  double normal();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace aci
