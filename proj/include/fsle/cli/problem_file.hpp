// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_CLI_PROBLEM_FILE_HPP
#define FSLE_CLI_PROBLEM_FILE_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsle/fuzzy.hpp"
#include "fsle/matrix.hpp"
#include "fsle/solvers.hpp"

namespace fsle::cli {

struct TriangularRecord {
  double c = 0.0;
  double mu = 0.0;
  double rho = 0.0;
  friend bool operator==(const TriangularRecord&, const TriangularRecord&) = default;
};

/// lower(z) = lower[0] + lower[1] z, likewise upper.
struct AffineRecord {
  std::array<double, 2> lower{};
  std::array<double, 2> upper{};
  friend bool operator==(const AffineRecord&, const AffineRecord&) = default;
};

struct SampledRecord {
  std::vector<double> grid;
  std::vector<double> lower;
  std::vector<double> upper;
  friend bool operator==(const SampledRecord&, const SampledRecord&) = default;
};

using RhsRecord = std::variant<TriangularRecord, AffineRecord, SampledRecord>;

/// A problem file. YAML (JSON works too):
///
///   n: 2
///   matrix:
///     - [1, -1]
///     - [1, 3]
///   rhs:
///     - {kind: triangular, c: 1, mu: 1, rho: 1}
///     - {kind: affine, lower: [4, 1], upper: [7, -2]}
///     - {kind: sampled, grid: [0, 0.5, 1], lower: [...], upper: [...]}
struct ProblemFile {
  std::size_t n = 0;
  CrispMatrix matrix;
  std::vector<RhsRecord> rhs;
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Malformed or invalid problem file. what() names the line and field.
class ProblemFileError : public std::runtime_error {
 public:
  ProblemFileError(int line, std::string field, const std::string& message);

  /// 1-based, 0 when unknown.
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);
std::string serialize_problem(const ProblemFile& file);

FuzzyNumber to_fuzzy(const RhsRecord& record);
FSLEProblem to_problem(const ProblemFile& file);

}  // namespace fsle::cli

#endif  // FSLE_CLI_PROBLEM_FILE_HPP
