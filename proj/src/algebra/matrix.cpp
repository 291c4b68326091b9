#include "oscusec/algebra/matrix.hpp"

#include <algorithm>
#include <utility>

#include "oscusec/error.hpp"

namespace oscusec {

ExactMatrix::ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                         std::vector<FieldElement> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvariantBreach("matrix entry count does not match rows x cols");
  }
  for (FieldElement e : entries_) {
    if (e.value() >= field_.modulus()) throw InvariantBreach("matrix entry not reduced");
  }
}

ExactMatrix::ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& other) const {
  if (!(other.field_ == field_) || other.cols_ != cols_) {
    throw InvariantBreach("cannot stack matrices with different shape or field");
  }
  std::vector<FieldElement> all(entries_);
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return ExactMatrix(field_, rows_ + other.rows_, cols_, std::move(all));
}

void ExactMatrix::Builder::add_row(std::span<const FieldElement> row) {
  if (row.size() != cols_) throw InvariantBreach("row length does not match column count");
  if (cols_ == 0) {
    ++rows_;
    return;
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
}

void ExactMatrix::Builder::append(const ExactMatrix& block) {
  if (!(block.field() == field_) || block.cols() != cols_) {
    throw InvariantBreach("cannot append block with different shape or field");
  }
  if (cols_ == 0) {
    rows_ += block.rows();
    return;
  }
  entries_.insert(entries_.end(), block.entries().begin(), block.entries().end());
}

ExactMatrix ExactMatrix::Builder::build() && {
  std::size_t r = rows();
  return ExactMatrix(field_, r, cols_, std::move(entries_));
}

std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  const std::uint64_t p = m.field().modulus();
  std::vector<std::uint64_t> work(rows * cols);
  std::transform(m.entries().begin(), m.entries().end(), work.begin(),
                 [](FieldElement e) { return std::uint64_t{e.value()}; });

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (work[r * cols + c] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    if (found != pivot_row) {
      std::swap_ranges(work.begin() + found * cols, work.begin() + (found + 1) * cols,
                       work.begin() + pivot_row * cols);
    }
    const std::uint64_t* prow = work.data() + pivot_row * cols;
    const std::uint64_t pivot = prow[c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      std::uint64_t* row = work.data() + r * cols;
      const std::uint64_t factor = row[c];
      if (factor == 0) continue;
      // row <- pivot * row - factor * prow, entries left of c are already zero.
      const std::uint64_t neg_factor = p - factor;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = (pivot * row[j] % p + neg_factor * prow[j]) % p;
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace oscusec
