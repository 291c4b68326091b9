#include "oscusec/combinatorics.hpp"

#include <limits>

#include "oscusec/error.hpp"

namespace oscusec {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max()) {
      throw InputError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::int64_t>(result);
}

namespace {

void enumerate(int vars, int left, ExponentVector& prefix, std::vector<ExponentVector>& out) {
  if (static_cast<int>(prefix.size()) == vars) {
    out.push_back(prefix);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    prefix.push_back(e);
    enumerate(vars, left - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ExponentVector> exponents_up_to(int vars, int max_total) {
  std::vector<ExponentVector> out;
  if (vars < 0 || max_total < 0) return out;
  ExponentVector prefix;
  prefix.reserve(static_cast<std::size_t>(vars));
  enumerate(vars, max_total, prefix, out);
  return out;
}

}  // namespace oscusec
