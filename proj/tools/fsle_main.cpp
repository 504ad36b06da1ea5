// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

// fsle: solve fuzzy systems of linear equations from the command line.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "fsle/cli/commands.hpp"
#include "fsle/cli/problem_file.hpp"

namespace {

using fsle::cli::RunConfig;

struct SolveArgs {
  std::string file;
  std::string method = "auto";
  std::string weak_rule;
  RunConfig cfg;
};

void add_run_options(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("file", args.file, "problem file (YAML)")->required();
  cmd->add_option("--method", args.method, "friedman | ezzati | embedding | auto")
      ->capture_default_str();
  cmd->add_option("--tolerance", args.cfg.tolerance, "absolute tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--grid", args.cfg.grid_points, "number of z levels (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
      ->capture_default_str();
  cmd->add_option("--weak-rule", args.weak_rule, "friedman | ezzati");
  cmd->add_option("--out", args.cfg.output_dir, "output directory")->capture_default_str();
}

template <class Command>
int run_file_command(SolveArgs& args, Command command) {
  const auto method = fsle::cli::parse_method(args.method);
  if (!method) {
    std::cerr << "error: unknown method '" << args.method << "'\n";
    return fsle::cli::exit_code::kInputError;
  }
  args.cfg.method = *method;
  if (!args.weak_rule.empty()) {
    args.cfg.weak_rule = fsle::cli::parse_weak_rule(args.weak_rule);
    if (!args.cfg.weak_rule) {
      std::cerr << "error: unknown weak rule '" << args.weak_rule << "'\n";
      return fsle::cli::exit_code::kInputError;
    }
  }
  try {
    const auto file = fsle::cli::load_problem(args.file);
    return command(file, args.cfg, std::cout, std::cerr);
  } catch (const fsle::cli::ProblemFileError& e) {
    std::cerr << args.file << ": " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << args.file << ": " << e.what() << "\n";
  }
  return fsle::cli::exit_code::kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve fuzzy systems of linear equations in parametric form"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve a problem file and classify the solution");
  add_run_options(solve, solve_args);

  SolveArgs compare_args;
  auto* compare = app.add_subcommand("compare", "run every method and compare costs");
  add_run_options(compare, compare_args);
  compare->add_option("--model", compare_args.cfg.model, "cost model: cubic | lu")
      ->capture_default_str();

  std::vector<std::uint64_t> sizes;
  std::string model = "cubic";
  auto* opcount = app.add_subcommand("opcount", "tabulate formula multiplication counts");
  opcount->add_option("--n", sizes, "system sizes, comma separated")->delimiter(',');
  opcount->add_option("--model", model, "cost model: cubic | lu")->capture_default_str();

  SolveArgs plot_args;
  auto* plot = app.add_subcommand("plot", "write SVG membership plots of the solution");
  add_run_options(plot, plot_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fsle::cli::exit_code::kInputError;
  }

  if (*solve) return run_file_command(solve_args, fsle::cli::cmd_solve);
  if (*compare) return run_file_command(compare_args, fsle::cli::cmd_compare);
  if (*plot) return run_file_command(plot_args, fsle::cli::cmd_plot);
  return fsle::cli::cmd_opcount(sizes, model, std::cout, std::cerr);
}
