// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_LU_HPP
#define FSLE_LU_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsle/matrix.hpp"

namespace fsle {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pivots with magnitude at or below this value are treated as zero:
/// n * machine epsilon * max |a_ij|.
template <class T>
double singularity_tolerance(const Matrix<T>& a) {
  return static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() *
         max_abs(a);
}

/// P*A = L*U with unit lower triangular L, stored packed in one matrix.
template <class T>
class LUFactorization {
 public:
  std::size_t size() const { return lu_.rows(); }

  /// Row i of P*A is row perm()[i] of A.
  const std::vector<std::size_t>& perm() const { return perm_; }

  Matrix<T> lower() const {
    const std::size_t n = size();
    Matrix<T> l = Matrix<T>::identity(n);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = lu_(i, j);
      }
    }
    return l;
  }

  Matrix<T> upper() const {
    const std::size_t n = size();
    Matrix<T> u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        u(i, j) = lu_(i, j);
      }
    }
    return u;
  }

  Matrix<T> permutation() const {
    const std::size_t n = size();
    Matrix<T> p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      p(i, perm_[i]) = T(1);
    }
    return p;
  }

  /// Solves A X = B column by column.
  Matrix<T> solve(const Matrix<T>& b) const {
    const std::size_t n = size();
    if (b.rows() != n) {
      throw std::invalid_argument("LU solve: right-hand side has " +
                                  std::to_string(b.rows()) + " rows, expected " +
                                  std::to_string(n));
    }
    const std::size_t m = b.cols();
    Matrix<T> x(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) {
        x(i, c) = b(perm_[i], c);
      }
    }
    // Forward substitution with unit diagonal.
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const T lij = lu_(i, j);
        for (std::size_t c = 0; c < m; ++c) {
          x(i, c) -= lij * x(j, c);
        }
      }
    }
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < n; ++j) {
        const T uij = lu_(ii, j);
        for (std::size_t c = 0; c < m; ++c) {
          x(ii, c) -= uij * x(j, c);
        }
      }
      const T pivot = lu_(ii, ii);
      for (std::size_t c = 0; c < m; ++c) {
        x(ii, c) /= pivot;
      }
    }
    return x;
  }

  std::vector<T> solve(std::span<const T> b) const {
    Matrix<T> rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      rhs(i, 0) = b[i];
    }
    const Matrix<T> x = solve(rhs);
    std::vector<T> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      out[i] = x(i, 0);
    }
    return out;
  }

 private:
  template <class U>
  friend std::optional<LUFactorization<U>> lu_factor(Matrix<U> a);

  LUFactorization(Matrix<T> lu, std::vector<std::size_t> perm)
      : lu_(std::move(lu)), perm_(std::move(perm)) {}

  Matrix<T> lu_;
  std::vector<std::size_t> perm_;
};

/// Gaussian elimination with partial (row) pivoting. Returns nullopt when a
/// pivot falls at or below singularity_tolerance(a).
template <class T>
std::optional<LUFactorization<T>> lu_factor(Matrix<T> a) {
  if (!a.square()) {
    throw std::invalid_argument("LU factorization needs a square matrix");
  }
  const std::size_t n = a.rows();
  const double tol = singularity_tolerance(a);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = i;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(to_double(a(k, k)));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(to_double(a(i, k)));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= tol) {
      return std::nullopt;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
      }
      std::swap(perm[k], perm[p]);
    }
    const T pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T l = a(i, k) / pivot;
      a(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) -= l * a(k, j);
      }
    }
  }
  return LUFactorization<T>(std::move(a), std::move(perm));
}

/// Solves A x = b for an affine right-hand side by two crisp solves, one for
/// the constant terms and one for the slopes.
AffineVector solve(const LUFactorization<double>& lu, const AffineVector& b);

/// Explicit inverse via n solves against the identity columns. Throws
/// SingularMatrixError.
CrispMatrix inverse(const CrispMatrix& a);

}  // namespace fsle

#endif  // FSLE_LU_HPP
