#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cyclicgv/codeword.hpp"

namespace cyclicgv {

/// SplitMix64 (Steele, Lea, Flood 2014). Counter based: the k-th output of a
/// generator seeded with s is mix(s + (k+1) * gamma), which gives O(1) access
/// to any substream seed.
class SplitMix64 {
 public:
  static constexpr std::string_view kName = "splitmix64";
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Generator for substream k of master seed s: seeded with the k-th output
  /// of SplitMix64(s).
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
    return SplitMix64(mix(seed + (k + 1) * kGamma));
  }

 private:
  std::uint64_t state_;
};

/// Uniform word of length n: x_i is bit (63 - i mod 64) of output floor(i/64).
Codeword random_word(std::size_t n, SplitMix64& rng);

}  // namespace cyclicgv
