#pragma once

#include <cstdint>

namespace oscusec {

// Second-order count for S^h of a non-defective n-dimensional variety whose
// 2-osculating spaces are as large as possible.
struct LaplaceCount {
  int n = 0;
  int h = 0;
  std::int64_t secant_dim = 0;  // K = (h+1) n + h
  std::int64_t equations = 0;   // T = C(K+2, 2) - (h+1) C(n+2, 2)
  std::int64_t rewritten = 0;   // C(K,2) - ((n^2 - n)/2 - 1) h - (n^2 - n)/2
  std::int64_t expanded = 0;    // (n^2 h^2 + n^2 h + 2 n h^2 + 2 n h + h^2 + h) / 2

  bool forms_agree() const noexcept { return equations == rewritten && equations == expanded; }
  // n = 1: T >= C(K,2) + h.  n >= 2: T <= C(K,2).
  bool curve_bound_holds() const;
  bool surface_bound_holds() const;
};

// Throws InputError unless n >= 1 and h >= 1.
LaplaceCount laplace_count(int n, int h);

// (h+1) C(n+2, 2) - 1, the largest possible dim T^2 of S^h(X).
std::int64_t osculating_bound(int n, int h);

bool osc_bound_check(int n, int h, std::int64_t observed_dim);

}  // namespace oscusec
