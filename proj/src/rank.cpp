#include "taylorres/rank.hpp"

#include <utility>

namespace taylorres {

std::size_t exact_rank(DenseMatrix m) {
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < m.rows && m.at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == m.rows) continue;
    if (pivot_row != rank)
      for (std::size_t j = col; j < m.cols; ++j)
        std::swap(m.at(rank, j), m.at(pivot_row, j));

    const BigInt pivot = m.at(rank, col);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const BigInt factor = m.at(i, col);
      for (std::size_t j = col + 1; j < m.cols; ++j)
        m.at(i, j) = (pivot * m.at(i, j) - factor * m.at(rank, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace taylorres
