// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_SPLITTING_HPP
#define FSLE_SPLITTING_HPP

#include <optional>
#include <stdexcept>

#include "fsle/matrix.hpp"

namespace fsle {

/// A = B - C with B the positive part of A and C the magnitude of its
/// negative part. Zero entries go to neither.
template <class T>
struct BasicSplit {
  Matrix<T> b;
  Matrix<T> c;
};

using BCSplit = BasicSplit<double>;

template <class T>
BasicSplit<T> split_bc(const Matrix<T>& a) {
  if (!a.square()) {
    throw std::invalid_argument("B/C splitting needs a square matrix");
  }
  const std::size_t n = a.rows();
  BasicSplit<T> s{Matrix<T>(n, n), Matrix<T>(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T x = a(i, j);
      if (x > T(0)) {
        s.b(i, j) = x;
      } else if (x < T(0)) {
        s.c(i, j) = -x;
      }
    }
  }
  return s;
}

/// B + C, i.e. the elementwise |A|.
template <class T>
Matrix<T> sum_bc(const BasicSplit<T>& s) {
  return s.b + s.c;
}

/// The 2n x 2n embedding matrix [[B, C], [C, B]].
template <class T>
Matrix<T> build_s(const BasicSplit<T>& s) {
  const std::size_t n = s.b.rows();
  Matrix<T> out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = s.b(i, j);
      out(i + n, j + n) = s.b(i, j);
      out(i, j + n) = s.c(i, j);
      out(i + n, j) = s.c(i, j);
    }
  }
  return out;
}

/// Blocks of the inverse of [[B, C], [C, B]] = [[D, E], [E, D]].
struct BlockInverse {
  CrispMatrix d;
  CrispMatrix e;
};

/// D = ((B+C)^-1 + (B-C)^-1) / 2, E = ((B+C)^-1 - (B-C)^-1) / 2.
/// nullopt when B+C or A = B-C is singular.
std::optional<BlockInverse> block_inverse(const BCSplit& s);

/// Assembles [[D, E], [E, D]].
CrispMatrix assemble(const BlockInverse& inv);

}  // namespace fsle

#endif  // FSLE_SPLITTING_HPP
