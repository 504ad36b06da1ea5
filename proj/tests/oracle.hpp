// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

// Test-only reference computations that share no code with the library's
// LU path: Laplace-expansion determinants and Cramer's rule.

#ifndef FSLE_TESTS_ORACLE_HPP
#define FSLE_TESTS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fsle/fuzzy.hpp"
#include "fsle/matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const fsle::CrispMatrix& a) {
  Dense d(a.rows(), std::vector<double>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d[i][j] = a(i, j);
  return d;
}

inline double det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double total = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<double> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    total += sign * m[0][col] * det(minor);
  }
  return total;
}

inline double det(const fsle::CrispMatrix& a) { return det(to_dense(a)); }

/// x with A x = b by Cramer's rule.
inline std::vector<double> cramer(const fsle::CrispMatrix& a, const std::vector<double>& b) {
  const Dense m = to_dense(a);
  const double d = det(m);
  std::vector<double> x(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    Dense mk = m;
    for (std::size_t i = 0; i < b.size(); ++i) mk[i][k] = b[i];
    x[k] = det(mk) / d;
  }
  return x;
}

/// Elementwise |A|, i.e. B + C, built directly.
inline fsle::CrispMatrix abs_matrix(const fsle::CrispMatrix& a) {
  fsle::CrispMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) < 0 ? -a(i, j) : a(i, j);
  return out;
}

/// Random n x n integer matrix with entries in [lo, hi].
inline fsle::CrispMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  fsle::CrispMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

/// Integer matrix whose A and |A| both have nonzero determinant.
inline fsle::CrispMatrix random_admissible_matrix(std::mt19937_64& rng, std::size_t n, int lo,
                                                  int hi) {
  for (;;) {
    fsle::CrispMatrix a = random_int_matrix(rng, n, lo, hi);
    if (std::abs(det(a)) >= 0.5 && std::abs(det(abs_matrix(a))) >= 0.5) return a;
  }
}

/// A v computed entry by entry from the sign rule of scalar multiplication:
/// lower_i = sum_j (a_ij >= 0 ? a_ij lower_j : a_ij upper_j), likewise upper.
/// Only for affine endpoints.
inline fsle::FuzzyVector apply(const fsle::CrispMatrix& a, const fsle::FuzzyVector& v) {
  fsle::FuzzyVector out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double lc = 0, ls = 0, uc = 0, us = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& lo = std::get<fsle::AffineZ>(v[j].lower);
      const auto& up = std::get<fsle::AffineZ>(v[j].upper);
      const double k = a(i, j);
      const auto& for_lower = k >= 0 ? lo : up;
      const auto& for_upper = k >= 0 ? up : lo;
      lc += k * for_lower.const_term;
      ls += k * for_lower.slope;
      uc += k * for_upper.const_term;
      us += k * for_upper.slope;
    }
    out.push_back({fsle::AffineZ{lc, ls}, fsle::AffineZ{uc, us}});
  }
  return out;
}

}  // namespace oracle

#endif  // FSLE_TESTS_ORACLE_HPP
