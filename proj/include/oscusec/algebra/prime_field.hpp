#pragma once

#include <cstdint>
#include <vector>

namespace oscusec {

// A residue in [0, p). The modulus lives in the PrimeField that produced it.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_ = 0;
};

// GF(p) for a prime 2^16 < p < 2^32. Products of two residues fit in 64 bits,
// so every operation is a single machine multiply and remainder.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = 1'000'003;
  static constexpr std::uint64_t kMinModulusExclusive = 1ULL << 16;
  static constexpr std::uint64_t kMaxModulusExclusive = 1ULL << 32;

  // Throws InputError unless the modulus is a prime inside the supported range.
  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const noexcept { return modulus_; }

  FieldElement from_int(std::int64_t v) const noexcept;
  FieldElement from_uint(std::uint64_t v) const noexcept {
    return FieldElement(static_cast<std::uint32_t>(v % modulus_));
  }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint64_t s = std::uint64_t{a.value()} + b.value();
    return FieldElement(static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s));
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return a.value() >= b.value()
               ? FieldElement(a.value() - b.value())
               : FieldElement(static_cast<std::uint32_t>(modulus_ - b.value() + a.value()));
  }
  FieldElement neg(FieldElement a) const noexcept {
    return a.is_zero() ? a : FieldElement(static_cast<std::uint32_t>(modulus_ - a.value()));
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return FieldElement(
        static_cast<std::uint32_t>(std::uint64_t{a.value()} * b.value() % modulus_));
  }
  FieldElement pow(FieldElement base, std::uint64_t exponent) const noexcept;

  // Throws ZeroInverse for x = 0.
  FieldElement inverse(FieldElement x) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t modulus_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

// Falling factorial e (e-1) ... (e-k+1) reduced into the field; zero when k > e.
FieldElement falling_factorial(const PrimeField& field, int e, int k) noexcept;

// Binomial coefficient C(n, k) reduced into the field (n small, k <= n).
FieldElement binomial_mod(const PrimeField& field, int n, int k) noexcept;

}  // namespace oscusec
