// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/cli/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "fsle/cli/format.hpp"

namespace fsle::cli {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string membership_svg(const FuzzyNumber& p, std::span<const double> grid,
                           std::string_view label, const PlotFrame& f) {
  std::vector<double> xs;
  std::vector<double> zs;
  for (double z : grid) {
    xs.push_back(eval(p.lower, z));
    zs.push_back(z);
  }
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    xs.push_back(eval(p.upper, *it));
    zs.push_back(*it);
  }
  const double core_lower = eval(p.lower, 1.0);
  const double core_upper = eval(p.upper, 1.0);

  double x_min = *std::min_element(xs.begin(), xs.end());
  double x_max = *std::max_element(xs.begin(), xs.end());
  if (x_max - x_min < 1e-12) {
    // Crisp value: a vertical spike in the middle of the axis.
    x_min -= 1.0;
    x_max += 1.0;
  } else {
    const double pad = 0.05 * (x_max - x_min);
    x_min -= pad;
    x_max += pad;
  }
  const auto px = [&](double x) {
    return f.left + (x - x_min) / (x_max - x_min) * (f.right - f.left);
  };
  const auto py = [&](double z) { return f.bottom - z * (f.bottom - f.top); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width
      << "\" height=\"" << f.height << "\" viewBox=\"0 0 " << f.width << ' ' << f.height
      << "\">\n";
  svg << "  <title>" << escape(label) << "</title>\n";
  svg << "  <metadata>\n"
      << "    <fsle:membership xmlns:fsle=\"urn:fsle:plot\" label=\"" << escape(label)
      << "\" core-lower=\"" << num(core_lower) << "\" core-upper=\"" << num(core_upper)
      << "\" x-min=\"" << num(x_min) << "\" x-max=\"" << num(x_max) << "\" left=\""
      << num(f.left) << "\" right=\"" << num(f.right) << "\" top=\"" << num(f.top)
      << "\" bottom=\"" << num(f.bottom) << "\"/>\n"
      << "  </metadata>\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << f.width << "\" height=\"" << f.height
      << "\" fill=\"white\"/>\n";

  // Axes with a few ticks.
  svg << "  <g stroke=\"black\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << f.left << "\" y1=\"" << f.bottom << "\" x2=\"" << f.right
      << "\" y2=\"" << f.bottom << "\"/>\n"
      << "    <line x1=\"" << f.left << "\" y1=\"" << f.bottom << "\" x2=\"" << f.left
      << "\" y2=\"" << f.top << "\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double x = x_min + (x_max - x_min) * k / 4.0;
    svg << "    <line x1=\"" << num(px(x)) << "\" y1=\"" << f.bottom << "\" x2=\"" << num(px(x))
        << "\" y2=\"" << f.bottom + 5 << "\"/>\n";
  }
  for (double z : {0.0, 0.5, 1.0}) {
    svg << "    <line x1=\"" << f.left - 5 << "\" y1=\"" << num(py(z)) << "\" x2=\"" << f.left
        << "\" y2=\"" << num(py(z)) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double x = x_min + (x_max - x_min) * k / 4.0;
    svg << "    <text x=\"" << num(px(x)) << "\" y=\"" << f.bottom + 18
        << "\" text-anchor=\"middle\">" << format_number(x) << "</text>\n";
  }
  for (double z : {0.0, 0.5, 1.0}) {
    svg << "    <text x=\"" << f.left - 8 << "\" y=\"" << num(py(z) + 4)
        << "\" text-anchor=\"end\">" << format_number(z) << "</text>\n";
  }
  svg << "    <text x=\"" << (f.left + f.right) / 2 << "\" y=\"" << f.height - 12
      << "\" text-anchor=\"middle\">value</text>\n"
      << "    <text x=\"16\" y=\"" << (f.top + f.bottom) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (f.top + f.bottom) / 2
      << ")\">z</text>\n"
      << "    <text x=\"" << (f.left + f.right) / 2 << "\" y=\"" << f.top - 16
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(label) << "</text>\n"
      << "  </g>\n";

  svg << "  <polyline class=\"membership\" fill=\"none\" stroke=\"#1f5fa8\" "
         "stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg << (i == 0 ? "" : " ") << num(px(xs[i])) << ',' << num(py(zs[i]));
  }
  svg << "\"/>\n";
  svg << "  <circle class=\"core\" cx=\"" << num(px(core_lower)) << "\" cy=\"" << num(py(1.0))
      << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  if (core_upper != core_lower) {
    svg << "  <circle class=\"core\" cx=\"" << num(px(core_upper)) << "\" cy=\""
        << num(py(1.0)) << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fsle::cli
