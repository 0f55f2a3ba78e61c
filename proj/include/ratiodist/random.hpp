#pragma once

// xoshiro256** with splitmix64 seeding, and Box-Muller normal variates.

#include <array>
#include <cstdint>

namespace ratiodist {

/// One step of splitmix64; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  /// State words are four successive splitmix64 outputs from `seed`.
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  result_type operator()() { return next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  /// Uniform on (0, 1): top 53 bits, offset by half an ulp.
  double uniform();
  /// Box-Muller cosine variate; consumes two uniforms.
  double normal();

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Seed of substream (seed, chunk, stream), used to split sampling work.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk, std::uint64_t stream);

}  // namespace ratiodist
