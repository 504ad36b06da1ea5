// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/endpoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fsle {

namespace {

void check_level(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("membership level " + std::to_string(z) +
                            " outside [0, 1]");
  }
}

}  // namespace

void check_grid(std::span<const double> grid) {
  if (grid.size() < 2) {
    throw std::invalid_argument("level grid needs at least the points 0 and 1");
  }
  if (grid.front() != 0.0 || grid.back() != 1.0) {
    throw std::invalid_argument("level grid must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("level grid must be strictly increasing");
    }
  }
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) {
    throw std::invalid_argument("grid needs at least 2 points");
  }
  std::vector<double> grid(points);
  const auto last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / last;
  }
  return grid;
}

SampledZ::SampledZ(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  check_grid(grid_);
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("sampled endpoint: grid and values differ in length");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sampled endpoint: non-finite value");
    }
  }
}

double eval(const AffineZ& f, double z) {
  check_level(z);
  return f.const_term + f.slope * z;
}

double eval(const SampledZ& f, double z) {
  check_level(z);
  const auto& grid = f.grid();
  const auto& values = f.values();
  auto it = std::lower_bound(grid.begin(), grid.end(), z);
  auto hi = static_cast<std::size_t>(it - grid.begin());
  if (grid[hi] == z) {
    return values[hi];
  }
  const std::size_t lo = hi - 1;
  const double t = (z - grid[lo]) / (grid[hi] - grid[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

double eval(const Endpoint& f, double z) {
  return std::visit([z](const auto& g) { return eval(g, z); }, f);
}

bool is_affine(const Endpoint& f) { return std::holds_alternative<AffineZ>(f); }

SampledZ sample(const Endpoint& f, std::span<const double> grid) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double z : grid) {
    values.push_back(eval(f, z));
  }
  return SampledZ(std::vector<double>(grid.begin(), grid.end()), std::move(values));
}

Endpoint add(const Endpoint& f, const Endpoint& g) {
  if (const auto* fa = std::get_if<AffineZ>(&f)) {
    if (const auto* ga = std::get_if<AffineZ>(&g)) {
      return AffineZ{fa->const_term + ga->const_term, fa->slope + ga->slope};
    }
  }
  const auto* fs = std::get_if<SampledZ>(&f);
  const auto* gs = std::get_if<SampledZ>(&g);
  if (fs != nullptr && gs != nullptr && fs->grid() != gs->grid()) {
    throw std::invalid_argument("cannot add sampled endpoints on different grids");
  }
  const auto& grid = fs != nullptr ? fs->grid() : gs->grid();
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = eval(f, grid[i]) + eval(g, grid[i]);
  }
  return SampledZ(grid, std::move(values));
}

Endpoint scale(double k, const Endpoint& f) {
  if (const auto* fa = std::get_if<AffineZ>(&f)) {
    return AffineZ{k * fa->const_term, k * fa->slope};
  }
  const auto& fs = std::get<SampledZ>(f);
  std::vector<double> values = fs.values();
  for (double& v : values) {
    v *= k;
  }
  return SampledZ(fs.grid(), std::move(values));
}

}  // namespace fsle
