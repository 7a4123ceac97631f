#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace diffprobe {

// Deterministic RNG used everywhere. All stochastic draws derive from a
// master seed through derive_seed(), so any step of any pipeline can be
// replayed in isolation without serializing generator state.

/// splitmix64-style mix of a seed and one stream tag.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Chained derivation: derive_seed(seed, s0, s1, ...) applied left to right.
uint64_t derive_seed(uint64_t seed, uint64_t s0, uint64_t s1);
uint64_t derive_seed(uint64_t seed, uint64_t s0, uint64_t s1, uint64_t s2);
uint64_t derive_seed(uint64_t seed, uint64_t s0, uint64_t s1, uint64_t s2, uint64_t s3);

/// Stable tag for labeled streams ("eps", "batch", ...). FNV-1a of the label.
uint64_t stream_tag(std::string_view label);

/// xoshiro256++ with an explicit Box-Muller normal, so draws are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n).
  uint64_t uniform_int(uint64_t n);
  /// Standard normal via Box-Muller (caches the second draw).
  double normal();

  void fill_normal(double* out, size_t n);
  void fill_normal(std::vector<double>& out) { fill_normal(out.data(), out.size()); }

  /// Fisher-Yates shuffle of indices 0..n-1.
  std::vector<size_t> permutation(size_t n);

 private:
  uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace diffprobe
