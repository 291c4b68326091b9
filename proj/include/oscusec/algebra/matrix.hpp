#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oscusec/algebra/prime_field.hpp"

namespace oscusec {

// Dense row-major matrix over GF(p). Immutable once built; use
// ExactMatrix::Builder to assemble one row at a time.
class ExactMatrix {
 public:
  class Builder;

  ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols,
              std::vector<FieldElement> entries);

  // rows x cols zero matrix.
  ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  std::span<const FieldElement> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const FieldElement> entries() const noexcept { return entries_; }

  // Stack `other` below this matrix. Both must share field and column count.
  ExactMatrix stacked(const ExactMatrix& other) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

class ExactMatrix::Builder {
 public:
  Builder(PrimeField field, std::size_t cols) : field_(field), cols_(cols) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return cols_ == 0 ? rows_ : entries_.size() / cols_; }

  void add_row(std::span<const FieldElement> row);
  void append(const ExactMatrix& block);

  ExactMatrix build() &&;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::size_t rows_ = 0;  // only meaningful when cols_ == 0
  std::vector<FieldElement> entries_;
};

// Exact rank over GF(p) by fraction-free elimination, pivoting on the first
// nonzero entry of each column.
std::size_t rank(const ExactMatrix& m);

}  // namespace oscusec
