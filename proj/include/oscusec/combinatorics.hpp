#pragma once

#include <cstdint>
#include <vector>

namespace oscusec {

using ExponentVector = std::vector<int>;

// Exact C(n, k); zero outside 0 <= k <= n. Throws InputError on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// All exponent vectors of length `vars` with entry sum <= max_total, in
// lexicographic order. C(vars + max_total, vars) of them.
std::vector<ExponentVector> exponents_up_to(int vars, int max_total);

}  // namespace oscusec
