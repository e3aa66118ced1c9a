#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

// Counter-based random number generation (Philox4x64-10). Streams are cheap:
// a generator is (key, stream) plus a block counter, so derived seeds give
// statistically independent, reproducible sequences that can run in parallel.
//
// Conventions (documented so other implementations can reproduce streams):
//   * key = (seed, stream), counter for block i >= 1 is (i, 0, 0, 0);
//     block i yields four 64-bit words, consumed in order.
//   * uniform doubles take the top 53 bits: (word >> 11) * 2^-53.
//   * gaussians use the Box-Muller transform on consecutive uniforms,
//     u1 mapped away from zero; the cosine branch is produced first.
//   * derive_seed(master, index) is the SplitMix64 finalizer applied to
//     master + (index + 1) * 0x9E3779B97F4A7C15.

namespace dpcp {

/// Raw Philox4x64-10 block function.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

/// Deterministic sub-seed derivation for trials, restarts and grid cells.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream} {}

  std::uint64_t next_u64();
  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform integer in [0, m), m > 0.
  std::uint64_t below(std::uint64_t m);
  /// Standard normal deviate.
  double gaussian();

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> buffer_{};
  std::uint64_t block_ = 0;  // index of the last generated block
  int pos_ = 4;              // next word to hand out
  double cached_gauss_ = 0.0;
  bool has_cached_gauss_ = false;
};

}  // namespace dpcp
