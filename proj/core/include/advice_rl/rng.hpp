#pragma once

#include <cstdint>
#include <random>

namespace advice_rl {

/// 64-bit avalanche finalizer (splitmix64 output function). Used everywhere a
/// derived seed is needed so independent implementations can agree on streams.
inline constexpr std::uint64_t avalanche64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Derived seed for sub-unit `index` of a master seed:
///   mix(master, i) = avalanche64(master + (i + 1) * 0x9E3779B97F4A7C15).
/// Trial i of an experiment uses mix(master_seed, i); the streams inside a
/// trial use mix(trial_seed, stream_id).
inline constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  return avalanche64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Fixed stream ids inside one trial. Keeping the streams separate means the
/// evaluation rolls and teacher draws never perturb the training trajectory.
enum class RngStream : std::uint64_t {
  kEnvironment = 0,
  kPolicy = 1,
  kTeacher = 2,
  kEvaluationBase = 1000,  // + checkpoint index
};

/// Seeded generator wrapper. All randomness in the library flows through an
/// injected Rng; nothing reads global state. Draw routines are hand-rolled on
/// top of mt19937_64 so the sequence of consumed values is fully specified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform int in [0, bound). Lemire's multiply-shift rejection method.
  int next_int(int bound) {
    const auto n = static_cast<std::uint64_t>(bound);
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<int>(m >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

inline Rng make_stream(std::uint64_t trial_seed, RngStream stream, std::uint64_t offset = 0) {
  return Rng(mix_seed(trial_seed, static_cast<std::uint64_t>(stream) + offset));
}

}  // namespace advice_rl
