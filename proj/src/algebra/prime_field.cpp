#include "oscusec/algebra/prime_field.hpp"

#include <array>
#include <string>

#include "oscusec/error.hpp"

namespace oscusec {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus <= kMinModulusExclusive || modulus >= kMaxModulusExclusive) {
    throw InputError("modulus " + std::to_string(modulus) +
                     " outside the supported range 2^16 < p < 2^32");
  }
  if (!is_prime(modulus)) {
    throw InputError("modulus " + std::to_string(modulus) + " is not prime");
  }
}

FieldElement PrimeField::from_int(std::int64_t v) const noexcept {
  auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return FieldElement(static_cast<std::uint32_t>(r));
}

FieldElement PrimeField::pow(FieldElement base, std::uint64_t exponent) const noexcept {
  return FieldElement(static_cast<std::uint32_t>(powmod64(base.value(), exponent, modulus_)));
}

FieldElement PrimeField::inverse(FieldElement x) const {
  if (x.is_zero()) throw ZeroInverse();
  return pow(x, modulus_ - 2);
}

FieldElement falling_factorial(const PrimeField& field, int e, int k) noexcept {
  if (k > e) return FieldElement(0);
  FieldElement result(1);
  for (int j = 0; j < k; ++j) result = field.mul(result, field.from_int(e - j));
  return result;
}

FieldElement binomial_mod(const PrimeField& field, int n, int k) noexcept {
  if (k < 0 || k > n) return FieldElement(0);
  // n stays far below p, so k! is invertible.
  FieldElement num = falling_factorial(field, n, k);
  FieldElement den = falling_factorial(field, k, k);
  return field.mul(num, field.inverse(den));
}

}  // namespace oscusec
