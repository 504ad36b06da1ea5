// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_FUZZY_HPP
#define FSLE_FUZZY_HPP

#include <optional>
#include <span>
#include <vector>

#include "fsle/endpoint.hpp"
#include "fsle/matrix.hpp"

namespace fsle {

/// A fuzzy number in parametric form: the lower and upper endpoints of its
/// z-level cut, z in [0, 1]. Validity is checked by validate_fuzzy_number,
/// never assumed.
struct FuzzyNumber {
  Endpoint lower;
  Endpoint upper;

  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;
};

using FuzzyVector = std::vector<FuzzyNumber>;

/// Triangular fuzzy number with core `center`, left spread mu and right
/// spread rho. Zero spreads are allowed (one-sided and crisp numbers).
struct TriangularFuzzy {
  double center = 0.0;
  double left_spread = 0.0;
  double right_spread = 0.0;

  friend bool operator==(const TriangularFuzzy&, const TriangularFuzzy&) = default;
};

/// lower = c - (1-z) mu, upper = c + (1-z) rho.
/// Throws std::invalid_argument on a negative or non-finite spread.
FuzzyNumber triangular_to_parametric(const TriangularFuzzy& t);

/// Inverse of triangular_to_parametric. nullopt when an endpoint is not
/// affine, the endpoints disagree at z = 1, or a recovered spread is
/// negative (all within `tol`).
std::optional<TriangularFuzzy> parametric_to_triangular(const FuzzyNumber& p,
                                                        double tol = kDefaultTolerance);

/// The crisp number k as a fuzzy number.
FuzzyNumber singleton(double k);

struct ValidityReport {
  bool lower_nondecreasing = true;
  bool upper_nonincreasing = true;
  bool ordered = true;  // lower(z) <= upper(z) everywhere

  bool valid() const { return lower_nondecreasing && upper_nonincreasing && ordered; }
};

/// Checks the three fuzzy-number conditions. Affine endpoints are checked
/// exactly from their slopes and their values at z = 0 and z = 1; sampled
/// endpoints at every point of `grid` and of their own grids.
ValidityReport validate_fuzzy_number(const FuzzyNumber& p, std::span<const double> grid,
                                     double tol = kDefaultTolerance);

FuzzyNumber fuzzy_add(const FuzzyNumber& p, const FuzzyNumber& q);

/// lower = p.lower - q.upper, upper = p.upper - q.lower.
FuzzyNumber fuzzy_sub(const FuzzyNumber& p, const FuzzyNumber& q);

/// Scales both endpoints by k, swapping them when k < 0.
FuzzyNumber scalar_mul(double k, const FuzzyNumber& p);

/// max over rows i, both endpoints and every z in `grid` of
/// |(A v)_i(z) - w_i(z)|, with A v formed by fuzzy arithmetic.
double fuzzy_residual(const CrispMatrix& a, const FuzzyVector& v, const FuzzyVector& w,
                      std::span<const double> grid);

}  // namespace fsle

#endif  // FSLE_FUZZY_HPP
