#ifndef GE_RNG_HPP
#define GE_RNG_HPP

#include <cstdint>
#include <random>

namespace ge {

// Stafford mix 13, the splitmix64 output stage. Used to derive independent
// per-sample seeds from (seed, index) so batches can run in any order and
// on any thread count with identical results.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 1));
}

// Unbiased bounded draw via rejection. std::uniform_int_distribution is
// implementation-defined; this mapping is pinned so seeded streams are
// reproducible across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return draw % bound;
}

} // namespace ge

#endif
