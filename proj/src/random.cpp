#include "cyclicgv/random.hpp"

#include <vector>

namespace cyclicgv {

Codeword random_word(std::size_t n, SplitMix64& rng) {
  if (n <= 64) {
    // x_0 .. x_{n-1} are the top n bits of the draw.
    const std::uint64_t draw = rng();
    return Codeword(n, n == 64 ? draw : draw >> (64 - n));
  }
  Codeword w(n);
  std::uint64_t draw = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) draw = rng();
    if ((draw >> (63 - i % 64)) & 1U) w.set_bit(i, true);
  }
  return w;
}

}  // namespace cyclicgv
