// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fsle {

FuzzyNumber triangular_to_parametric(const TriangularFuzzy& t) {
  if (!std::isfinite(t.center) || !std::isfinite(t.left_spread) ||
      !std::isfinite(t.right_spread)) {
    throw std::invalid_argument("triangular fuzzy number has a non-finite field");
  }
  if (t.left_spread < 0.0 || t.right_spread < 0.0) {
    throw std::invalid_argument("triangular fuzzy number needs nonnegative spreads");
  }
  return FuzzyNumber{AffineZ{t.center - t.left_spread, t.left_spread},
                     AffineZ{t.center + t.right_spread, -t.right_spread}};
}

std::optional<TriangularFuzzy> parametric_to_triangular(const FuzzyNumber& p, double tol) {
  const auto* lo = std::get_if<AffineZ>(&p.lower);
  const auto* up = std::get_if<AffineZ>(&p.upper);
  if (lo == nullptr || up == nullptr) {
    return std::nullopt;
  }
  const double core_lo = lo->const_term + lo->slope;
  const double core_up = up->const_term + up->slope;
  if (std::abs(core_lo - core_up) > tol) {
    return std::nullopt;
  }
  if (lo->slope < -tol || up->slope > tol) {
    return std::nullopt;
  }
  return TriangularFuzzy{core_lo, std::max(lo->slope, 0.0), std::max(-up->slope, 0.0)};
}

FuzzyNumber singleton(double k) { return FuzzyNumber{AffineZ{k, 0.0}, AffineZ{k, 0.0}}; }

namespace {

std::vector<double> check_points(const FuzzyNumber& p, std::span<const double> grid) {
  std::vector<double> points(grid.begin(), grid.end());
  for (const Endpoint* e : {&p.lower, &p.upper}) {
    if (const auto* s = std::get_if<SampledZ>(e)) {
      points.insert(points.end(), s->grid().begin(), s->grid().end());
    }
  }
  points.push_back(0.0);
  points.push_back(1.0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

ValidityReport validate_fuzzy_number(const FuzzyNumber& p, std::span<const double> grid,
                                     double tol) {
  ValidityReport report;
  const auto* lo = std::get_if<AffineZ>(&p.lower);
  const auto* up = std::get_if<AffineZ>(&p.upper);
  if (lo != nullptr && up != nullptr) {
    report.lower_nondecreasing = lo->slope >= -tol;
    report.upper_nonincreasing = up->slope <= tol;
    // The gap upper - lower is affine, so its endpoint values bound it.
    report.ordered = eval(*lo, 0.0) <= eval(*up, 0.0) + tol &&
                     eval(*lo, 1.0) <= eval(*up, 1.0) + tol;
    return report;
  }
  // Both endpoints are piecewise linear with knots inside `points`.
  const auto points = check_points(p, grid);
  double prev_lo = eval(p.lower, points.front());
  double prev_up = eval(p.upper, points.front());
  report.ordered = prev_lo <= prev_up + tol;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double l = eval(p.lower, points[i]);
    const double u = eval(p.upper, points[i]);
    if (l < prev_lo - tol) report.lower_nondecreasing = false;
    if (u > prev_up + tol) report.upper_nonincreasing = false;
    if (l > u + tol) report.ordered = false;
    prev_lo = l;
    prev_up = u;
  }
  return report;
}

FuzzyNumber fuzzy_add(const FuzzyNumber& p, const FuzzyNumber& q) {
  return FuzzyNumber{add(p.lower, q.lower), add(p.upper, q.upper)};
}

FuzzyNumber fuzzy_sub(const FuzzyNumber& p, const FuzzyNumber& q) {
  return FuzzyNumber{add(p.lower, scale(-1.0, q.upper)), add(p.upper, scale(-1.0, q.lower))};
}

FuzzyNumber scalar_mul(double k, const FuzzyNumber& p) {
  if (k >= 0.0) {
    return FuzzyNumber{scale(k, p.lower), scale(k, p.upper)};
  }
  return FuzzyNumber{scale(k, p.upper), scale(k, p.lower)};
}

double fuzzy_residual(const CrispMatrix& a, const FuzzyVector& v, const FuzzyVector& w,
                      std::span<const double> grid) {
  if (!a.square() || a.cols() != v.size() || a.rows() != w.size()) {
    throw std::invalid_argument("fuzzy residual: matrix is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ", vectors have " +
                                std::to_string(v.size()) + " and " + std::to_string(w.size()) +
                                " entries");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FuzzyNumber row = singleton(0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      row = fuzzy_add(row, scalar_mul(a(i, j), v[j]));
    }
    for (double z : grid) {
      worst = std::max(worst, std::abs(eval(row.lower, z) - eval(w[i].lower, z)));
      worst = std::max(worst, std::abs(eval(row.upper, z) - eval(w[i].upper, z)));
    }
  }
  return worst;
}

}  // namespace fsle
