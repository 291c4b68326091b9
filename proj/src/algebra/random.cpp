#include "oscusec/algebra/random.hpp"

#include <limits>

#include "oscusec/error.hpp"

namespace oscusec {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RandomStream RandomStream::derive(Seed master, std::uint64_t stream_id) {
  return RandomStream(Seed{splitmix64(splitmix64(master.value) ^ splitmix64(~stream_id))});
}

std::uint64_t RandomStream::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InvariantBreach("empty sampling range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t bound = span + 1;
  // Reject the top partial bucket so every value is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % bound;
}

FieldElement RandomStream::nonzero(const PrimeField& field) {
  return FieldElement(static_cast<std::uint32_t>(uniform(1, field.modulus() - 1)));
}

std::vector<FieldElement> random_affine_point(const PrimeField& field, int dim,
                                              RandomStream& rng) {
  if (dim < 1) throw InputError("affine point dimension must be at least 1");
  std::vector<FieldElement> point;
  point.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) point.push_back(rng.nonzero(field));
  return point;
}

}  // namespace oscusec
