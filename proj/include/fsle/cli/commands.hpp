// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_CLI_COMMANDS_HPP
#define FSLE_CLI_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "fsle/cli/problem_file.hpp"
#include "fsle/solvers.hpp"

namespace fsle::cli {

inline constexpr std::string_view kNoSolutionMessage =
    "The system does not have fuzzy number vector solution";

enum class MethodChoice { Friedman, Ezzati, Embedding, Auto };

std::optional<MethodChoice> parse_method(std::string_view name);
std::optional<WeakRule> parse_weak_rule(std::string_view name);

struct RunConfig {
  MethodChoice method = MethodChoice::Auto;
  double tolerance = kDefaultTolerance;
  std::size_t grid_points = kDefaultGridPoints;
  std::optional<WeakRule> weak_rule;
  std::filesystem::path output_dir = ".";
  std::string model = "cubic";
};

namespace exit_code {
inline constexpr int kStrong = 0;
inline constexpr int kInputError = 1;
inline constexpr int kWeak = 2;
inline constexpr int kNoFuzzySolution = 3;
inline constexpr int kSingular = 4;
}  // namespace exit_code

int exit_code_for(Status status);

SolveReport run(const FSLEProblem& problem, const RunConfig& cfg);

/// Solves, prints the report and writes <output_dir>/solution.csv when a
/// (strong or weak) solution exists. Returns the process exit code.
int cmd_solve(const ProblemFile& file, const RunConfig& cfg, std::ostream& out,
              std::ostream& err);

/// Runs every applicable method with multiplication counting and prints a
/// comparison table. Returns 0 unless the input is invalid.
int cmd_compare(const ProblemFile& file, const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

/// Formula operation counts and their differences for each n.
int cmd_opcount(std::span<const std::uint64_t> sizes, std::string_view model, std::ostream& out,
                std::ostream& err);

/// Writes component_<i>.svg and membership.csv into cfg.output_dir.
int cmd_plot(const ProblemFile& file, const RunConfig& cfg, std::ostream& out,
             std::ostream& err);

}  // namespace fsle::cli

#endif  // FSLE_CLI_COMMANDS_HPP
