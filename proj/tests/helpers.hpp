// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
#pragma once

#include <parcs/common.hpp>
#include <parcs/rng.hpp>

namespace parcs::test {

inline Vec random_complex_vector(int n, RandomStream& stream) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(stream.gaussian(), stream.gaussian());
  return v;
}

inline Mat random_complex_matrix(int rows, int cols, RandomStream& stream) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(stream.gaussian(), stream.gaussian());
  }
  return m;
}

inline Mat random_real_matrix_complex(int rows, int cols, RandomStream& stream) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(stream.gaussian(), 0.0);
  }
  return m;
}

}  // namespace parcs::test
