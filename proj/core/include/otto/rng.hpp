#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace otto {

/// SplitMix64 (Steele, Lea & Flood 2014). Stateless mixing makes it trivial
/// to derive independent per-shard streams from one seed.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  result_type operator()() noexcept {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform double in the open interval (0, 1), 53-bit resolution.
  double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

 private:
  std::uint64_t state_;
};

/// Seed of the stream that owns shard `shard` of a run seeded with `seed`.
constexpr std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) noexcept {
  return SplitMix64::mix(seed ^ SplitMix64::mix((shard + 1) * SplitMix64::kGolden));
}

/// Written into run manifests so outputs can be traced to the sampler.
inline constexpr std::string_view kGeneratorId = "splitmix64/shard-65536";

}  // namespace otto
