#pragma once

#include <cmath>
#include <cstdint>

#include "gkpft/constants.hpp"

namespace gkpft {

namespace detail {

// SplitMix64 finalizer (Steele/Lea/Vigna).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace detail

/// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t next() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// Independent random stream for one Monte Carlo sample. The stream key is a
/// counter-based hash of (seed, sample index):
///
///   key(seed, i) = mix64(mix64(seed) + (i + 1) * golden)
///
/// so sample i draws the same values regardless of evaluation order. Normals
/// come from Box-Muller with the spare value cached within the stream.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t sample_index)
      : gen_(detail::mix64(detail::mix64(seed) + (sample_index + 1) * detail::kGolden)) {}

  // 53-bit uniform in (0, 1]; never 0, so log() in normal() is safe.
  double uniform() {
    return (static_cast<double>(gen_.next() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * kPi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  SplitMix64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gkpft
