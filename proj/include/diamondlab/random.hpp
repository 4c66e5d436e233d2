#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace diamondlab {

/// Seeded stream with platform-independent output: std::mt19937_64 plus
/// hand-written distributions.
class RandomStream {
 public:
  /// Identifier recorded in simulation reports.
  static constexpr const char* kAlgorithm =
      "mt19937_64;substream=splitmix64(seed,index);uniform=53bit;normal=box-muller;"
      "geometric=inversion";

  static constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();

  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream number `index` derived from a master seed.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();
  /// Uniform integer on [lo, hi], unbiased.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  /// Standard normal.
  double normal();
  /// Index of the first success in Bernoulli(q) trials, counting from 1.
  /// Returns kNever when q == 0.
  std::uint64_t geometric(double q);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace diamondlab
