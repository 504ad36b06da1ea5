// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include "fsle/lu.hpp"
#include "fsle/matrix.hpp"

namespace fsle {

void check_finite(const CrispMatrix& a) {
  for (double x : a.data()) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("matrix has a non-finite entry");
    }
  }
}

AffineVector solve(const LUFactorization<double>& lu, const AffineVector& b) {
  CrispMatrix rhs(b.size(), 2);
  for (std::size_t i = 0; i < b.size(); ++i) {
    rhs(i, 0) = b[i].const_term;
    rhs(i, 1) = b[i].slope;
  }
  const CrispMatrix x = lu.solve(rhs);
  AffineVector out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    out[i] = AffineZ{x(i, 0), x(i, 1)};
  }
  return out;
}

CrispMatrix inverse(const CrispMatrix& a) {
  auto lu = lu_factor(a);
  if (!lu) {
    throw SingularMatrixError("matrix is singular to working precision");
  }
  return lu->solve(CrispMatrix::identity(a.rows()));
}

}  // namespace fsle
