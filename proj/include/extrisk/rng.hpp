#pragma once

#include <cstdint>
#include <cstddef>

namespace extrisk {

/// splitmix64 finalizer. Used both as a seed mixer and to derive substream
/// keys; full 64-bit avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seeded random stream identified by (master_seed, stream_id).
///
/// The same pair always reproduces the same draw sequence, on any thread and
/// any run. Distinct stream_ids give statistically independent streams, so
/// parallel workers each take their own substream instead of sharing state.
/// The generator is xoshiro256** with state derived from the pair through
/// splitmix64.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_id = 0) noexcept
      : master_seed_(master_seed), stream_id_(stream_id) {
    std::uint64_t z = mix64(master_seed) ^ mix64(mix64(stream_id) + 0x517cc1b727220a95ull);
    for (auto& s : state_) {
      z = mix64(z);
      s = z;
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Derives a child stream keyed by `key`. Children of distinct keys, and of
  /// distinct parents, do not collide in practice (64-bit mixed ids).
  RngStream substream(std::uint64_t key) const noexcept {
    return RngStream(master_seed_, mix64(stream_id_ * 0x2545f4914f6cdd1dull + key + 1));
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double strictly inside (0, 1); the numerator is always odd, so
  /// neither endpoint can occur. Safe under log() and pow(, negative).
  double uniform_open() noexcept {
    return static_cast<double>(((next_u64() >> 12) << 1) + 1) * 0x1.0p-53;
  }

  /// Uniform index in {0, ..., n-1}, unbiased via rejection.
  std::size_t uniform_index(std::size_t n) noexcept {
    const std::uint64_t bound = n == 0 ? 0 : ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= bound);
    return static_cast<std::size_t>(x % n);
  }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_[4];
};

}  // namespace extrisk
