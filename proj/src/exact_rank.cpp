#include "qseries/exact_rank.hpp"

#include <utility>

namespace qseries {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::size_t exact_rank(IntMatrix m) {
  std::size_t rank = 0;
  Coefficient previous = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);

    const Coefficient p = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Coefficient factor = m(r, col);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        Coefficient v = p * m(r, c) - factor * m(rank, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(r, c) = std::move(v);
      }
      m(r, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace qseries
