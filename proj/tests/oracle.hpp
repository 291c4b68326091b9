#pragma once

// Reference rank for tests: plain Gauss-Jordan with modular inverses on a
// copy of the entries. Shares nothing with the library's elimination.

#include <cstdint>
#include <utility>
#include <vector>

#include "oscusec/algebra/matrix.hpp"

namespace oscusec::oracle {

inline std::uint64_t oracle_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t oracle_rank(const ExactMatrix& m) {
  const std::uint64_t p = m.field().modulus();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c).value();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = oracle_pow(a[rank][c], p - 2, p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c];
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = (a[r][k] + p - f * a[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oscusec::oracle
