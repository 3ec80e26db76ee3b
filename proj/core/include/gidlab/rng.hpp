#pragma once

#include <array>
#include <cstdint>

namespace gidlab {

/// SplitMix64; used only to expand seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

/// xoshiro256++ with an explicit substream rule.
///
/// Stream derivation: substream k of logical seed s is seeded from four
/// SplitMix64 outputs whose initial state is s + k * 0xA0761D6478BD642F.
/// Batch generation assigns one substream per fixed-size chunk, so results
/// do not depend on how chunks are scheduled across workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    SplitMix64 sm(seed + stream * 0xA0761D6478BD642Full);
    for (auto& word : state_) word = sm.next();
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
      state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0,1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0,1); safe to pass to log().
  double next_double_open() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_;
};

/// Stable hash for deriving auxiliary seeds (thinning streams, comparator
/// batches) from one experiment seed without colliding with chunk substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 sm(seed ^ (0xD1B54A32D192ED03ull + tag * 0x8BB84B93962EACC9ull));
  return sm.next();
}

}  // namespace gidlab
