#include "mastermind/common/rng.hpp"

namespace mastermind {

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(base ^ 0x6d6173746572ULL);
  for (std::uint64_t p : path) {
    h = splitmix64(h ^ splitmix64(p + 0x1234567ULL));
  }
  return h;
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  // Plain rejection sampling over the raw 64-bit stream.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

}  // namespace mastermind
