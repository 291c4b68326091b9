#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oscusec/algebra/prime_field.hpp"

namespace oscusec {

struct Seed {
  std::uint64_t value = 0;
  friend constexpr bool operator==(Seed, Seed) = default;
};

inline constexpr Seed kDefaultSeed{0x05C05EC5EEDULL};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Deterministic stream of field elements. The engine is mt19937_64, whose
// output sequence is fixed by the standard; sampling uses our own rejection
// loop so results are identical across standard libraries.
class RandomStream {
 public:
  explicit RandomStream(Seed seed) : seed_(seed), engine_(seed.value) {}

  // Independent child stream, e.g. one per trial.
  static RandomStream derive(Seed master, std::uint64_t stream_id);

  Seed seed() const noexcept { return seed_; }

  // Uniform in [lo, hi], inclusive.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  // Uniform nonzero element of the field.
  FieldElement nonzero(const PrimeField& field);

 private:
  Seed seed_;
  std::mt19937_64 engine_;
};

// dim coordinates, each uniform in [1, p-1]. Zero is excluded so sampled points
// stay off the coordinate hyperplanes.
std::vector<FieldElement> random_affine_point(const PrimeField& field, int dim,
                                              RandomStream& rng);

}  // namespace oscusec
