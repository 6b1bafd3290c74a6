#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace howelab {

/// SplitMix64: the reproducible 64-bit-seed generator used by every
/// verification suite.  The output stream is a pure function of the seed
/// (state advances by the golden-ratio increment; each output is the
/// standard SplitMix64 finalizer applied to the state), so independent
/// implementations can replay the exact sample stream.  See README for the
/// full stream specification, including how normal deviates are drawn.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return scramble(state_);
  }

  /// Uniform in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate via Box-Muller; consumes exactly two 64-bit
  /// outputs and returns the cosine branch only.
  double gaussian() {
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex deviate with independent N(0,1) real and imaginary parts
  /// (real part drawn first).
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Per-sample substream: mixes the index into the seed so batches can be
  /// evaluated in any order (or in parallel) with identical streams.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(scramble(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
  }

 private:
  std::uint64_t state_;
};

}  // namespace howelab
