#include "oscusec/terracini/laplace.hpp"

#include "oscusec/combinatorics.hpp"
#include "oscusec/error.hpp"

namespace oscusec {

bool LaplaceCount::curve_bound_holds() const {
  return equations >= binomial(secant_dim, 2) + h;
}

bool LaplaceCount::surface_bound_holds() const { return equations <= binomial(secant_dim, 2); }

LaplaceCount laplace_count(int n, int h) {
  if (n < 1 || h < 1) throw InputError("laplace_count needs n >= 1 and h >= 1");
  LaplaceCount c;
  c.n = n;
  c.h = h;
  const std::int64_t nn = n;
  const std::int64_t hh = h;
  c.secant_dim = (hh + 1) * nn + hh;
  c.equations = binomial(c.secant_dim + 2, 2) - (hh + 1) * binomial(nn + 2, 2);
  // n^2 - n is always even, so both halves are exact.
  const std::int64_t half_nn = (nn * nn - nn) / 2;
  c.rewritten = binomial(c.secant_dim, 2) - (half_nn - 1) * hh - half_nn;
  c.expanded =
      (nn * nn * hh * hh + nn * nn * hh + 2 * nn * hh * hh + 2 * nn * hh + hh * hh + hh) / 2;
  return c;
}

std::int64_t osculating_bound(int n, int h) {
  if (n < 1 || h < 0) throw InputError("osculating_bound needs n >= 1 and h >= 0");
  return (std::int64_t{h} + 1) * binomial(n + 2, 2) - 1;
}

bool osc_bound_check(int n, int h, std::int64_t observed_dim) {
  return observed_dim <= osculating_bound(n, h);
}

}  // namespace oscusec
