#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace taylorres {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix; 0 x c and r x 0 shapes are allowed.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Rank over the rationals by fraction-free (Bareiss) elimination. Exact
/// for any integer entries; the result does not depend on row or column
/// order of the input.
std::size_t exact_rank(DenseMatrix m);

}  // namespace taylorres
