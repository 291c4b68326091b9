#pragma once

#include "oscusec/algebra/prime_field.hpp"
#include "oscusec/algebra/random.hpp"

namespace oscusec {

// Everything a randomized rank computation depends on. Two runs with equal
// contexts produce identical results regardless of threading.
struct ComputeContext {
  PrimeField field{};
  Seed seed = kDefaultSeed;
  int trials = 3;

  RandomStream trial_stream(int trial) const {
    return RandomStream::derive(seed, static_cast<std::uint64_t>(trial));
  }
};

}  // namespace oscusec
