// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_CLI_PLOT_HPP
#define FSLE_CLI_PLOT_HPP

#include <span>
#include <string>
#include <string_view>

#include "fsle/fuzzy.hpp"

namespace fsle::cli {

/// Plot frame in SVG user units.
struct PlotFrame {
  double width = 480;
  double height = 360;
  double left = 60;
  double right = 450;
  double top = 40;
  double bottom = 310;
};

/// Static SVG 1.1 drawing of a membership function: value on the x axis,
/// level z on the y axis. One polyline runs along the lower branch from
/// (lower(0), 0) to (lower(1), 1) and back down the upper branch from
/// (upper(1), 1) to (upper(0), 0). The exact core values and the axis range
/// are recorded in a <metadata> element.
std::string membership_svg(const FuzzyNumber& p, std::span<const double> grid,
                           std::string_view label, const PlotFrame& frame = {});

}  // namespace fsle::cli

#endif  // FSLE_CLI_PLOT_HPP
