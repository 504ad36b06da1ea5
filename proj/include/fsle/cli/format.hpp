// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_CLI_FORMAT_HPP
#define FSLE_CLI_FORMAT_HPP

#include <ostream>
#include <span>
#include <string>

#include "fsle/endpoint.hpp"
#include "fsle/fuzzy.hpp"

namespace fsle::cli {

/// At most 6 significant digits, trailing zeros dropped, no "-0".
std::string format_number(double x);

/// Shortest decimal that reads back to the same double.
std::string format_exact(double x);

/// Closed form such as "1.375+0.625z", "4-z", "3z" or "2".
std::string format_affine(const AffineZ& f);

/// "(lower, upper)" in closed form, or "" if an endpoint is sampled.
std::string format_closed_form(const FuzzyNumber& p);

/// CSV with header `component,z,lower,upper`, one row per level per
/// component (components numbered from 1). Values are written exactly.
void write_membership_csv(std::ostream& out, const FuzzyVector& v, std::span<const double> grid);

}  // namespace fsle::cli

#endif  // FSLE_CLI_FORMAT_HPP
