#pragma once
// Shared helpers for the unit suites.

#include "witnesslab/rng.hpp"
#include "witnesslab/tensor.hpp"

#include "doctest.h"

namespace wtest {

using namespace witnesslab;

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return inf_norm(a - b);
}

inline Matrix random_matrix(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return m;
}

inline Matrix random_hermitian(Rng& rng, int n) {
  const Matrix m = random_matrix(rng, n, n);
  return 0.5 * (m + m.adjoint()).eval();
}

}  // namespace wtest
