// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_ENDPOINT_HPP
#define FSLE_ENDPOINT_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace fsle {

/// Absolute tolerance used for validity checks, residuals and sign tests.
inline constexpr double kDefaultTolerance = 1e-9;

/// Number of points in the uniform z-grid used for sampled checks.
inline constexpr std::size_t kDefaultGridPoints = 101;

/// An endpoint function of the membership level z that is affine:
/// f(z) = const_term + slope * z.
struct AffineZ {
  double const_term = 0.0;
  double slope = 0.0;

  friend bool operator==(const AffineZ&, const AffineZ&) = default;
};

/// An endpoint function given by its values on an ordered grid of levels,
/// linearly interpolated in between.
///
/// The grid must be strictly increasing, start at 0 and end at 1.
class SampledZ {
 public:
  SampledZ(std::vector<double> grid, std::vector<double> values);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const SampledZ&, const SampledZ&) = default;

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
};

using Endpoint = std::variant<AffineZ, SampledZ>;

/// Throws std::invalid_argument unless `grid` is a valid level grid.
void check_grid(std::span<const double> grid);

/// `points` uniformly spaced levels from 0 to 1 inclusive (points >= 2).
std::vector<double> uniform_grid(std::size_t points);

/// Evaluates an endpoint at level z. Throws std::domain_error outside [0,1].
double eval(const AffineZ& f, double z);
double eval(const SampledZ& f, double z);
double eval(const Endpoint& f, double z);

bool is_affine(const Endpoint& f);

/// Values of `f` at every level in `grid`, as a sampled endpoint.
SampledZ sample(const Endpoint& f, std::span<const double> grid);

/// Pointwise sum. Affine + affine stays affine; anything involving a
/// sampled operand is evaluated on that operand's grid. Two sampled
/// operands must share a grid (std::invalid_argument otherwise).
Endpoint add(const Endpoint& f, const Endpoint& g);

/// Pointwise product with a real scalar.
Endpoint scale(double k, const Endpoint& f);

}  // namespace fsle

#endif  // FSLE_ENDPOINT_HPP
