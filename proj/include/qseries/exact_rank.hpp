#pragma once

#include <cstddef>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coefficient& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coefficient& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coefficient> data_;
};

// Rank by Bareiss fraction-free elimination. Every division is exact,
// so intermediate entries stay integral and no rounding is possible.
std::size_t exact_rank(IntMatrix m);

}  // namespace qseries
