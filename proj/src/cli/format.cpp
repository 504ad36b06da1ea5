// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/cli/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace fsle::cli {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_exact(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

std::string format_affine(const AffineZ& f) {
  const std::string c = format_number(f.const_term);
  const std::string m = format_number(std::abs(f.slope));
  if (m == "0") return c;
  const bool negative = f.slope < 0.0;
  const std::string term = (m == "1" ? "" : m) + "z";
  if (c == "0") return (negative ? "-" : "") + term;
  return c + (negative ? "-" : "+") + term;
}

std::string format_closed_form(const FuzzyNumber& p) {
  const auto* lo = std::get_if<AffineZ>(&p.lower);
  const auto* up = std::get_if<AffineZ>(&p.upper);
  if (lo == nullptr || up == nullptr) return "";
  return "(" + format_affine(*lo) + ", " + format_affine(*up) + ")";
}

void write_membership_csv(std::ostream& out, const FuzzyVector& v, std::span<const double> grid) {
  out << "component,z,lower,upper\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (double z : grid) {
      out << (i + 1) << ',' << format_exact(z) << ',' << format_exact(eval(v[i].lower, z)) << ','
          << format_exact(eval(v[i].upper, z)) << '\n';
    }
  }
}

}  // namespace fsle::cli
