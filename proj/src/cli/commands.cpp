// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fsle/cli/format.hpp"
#include "fsle/cli/plot.hpp"
#include "fsle/opcount.hpp"

namespace fsle::cli {

std::optional<MethodChoice> parse_method(std::string_view name) {
  if (name == "friedman") return MethodChoice::Friedman;
  if (name == "ezzati") return MethodChoice::Ezzati;
  if (name == "embedding") return MethodChoice::Embedding;
  if (name == "auto") return MethodChoice::Auto;
  return std::nullopt;
}

std::optional<WeakRule> parse_weak_rule(std::string_view name) {
  if (name == "friedman") return WeakRule::Friedman;
  if (name == "ezzati") return WeakRule::Ezzati;
  return std::nullopt;
}

int exit_code_for(Status status) {
  switch (status) {
    case Status::Strong: return exit_code::kStrong;
    case Status::Weak: return exit_code::kWeak;
    case Status::NotFuzzy:
    case Status::RejectedEarly: return exit_code::kNoFuzzySolution;
    case Status::SingularMatrix: return exit_code::kSingular;
  }
  return exit_code::kInputError;
}

namespace {

SolveOptions options_of(const RunConfig& cfg) {
  return SolveOptions{cfg.tolerance, cfg.grid_points, cfg.weak_rule};
}

std::string endpoints_str(const std::vector<Endpoint>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    const auto* a = std::get_if<AffineZ>(&v[i]);
    s += a != nullptr ? format_affine(*a) : "sampled";
  }
  return s + ")";
}

std::string crisp_str(const CrispVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += format_number(v[i]);
  }
  return s + ")";
}

std::vector<double> solution_grid(const FuzzyVector& v, std::size_t points) {
  for (const auto& p : v) {
    if (const auto* s = std::get_if<SampledZ>(&p.lower)) return s->grid();
    if (const auto* s = std::get_if<SampledZ>(&p.upper)) return s->grid();
  }
  return uniform_grid(points);
}

void print_solution(std::ostream& out, const FuzzyVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string closed = format_closed_form(v[i]);
    if (!closed.empty()) {
      out << "v" << (i + 1) << " = " << closed << "\n";
      continue;
    }
    out << "v" << (i + 1) << ":\n";
    out << "  " << std::setw(6) << "z" << "  " << std::setw(12) << "lower" << "  "
        << std::setw(12) << "upper" << "\n";
    for (int k = 0; k <= 10; ++k) {
      const double z = k / 10.0;
      out << "  " << std::setw(6) << format_number(z) << "  " << std::setw(12)
          << format_number(eval(v[i].lower, z)) << "  " << std::setw(12)
          << format_number(eval(v[i].upper, z)) << "\n";
    }
  }
}

void print_diagnostics(std::ostream& out, const SolveReport& r) {
  out << "method: " << to_string(r.method) << "\n";
  out << "status: " << to_string(r.status) << "\n";
  if (r.d_prime) out << "d' = " << crisp_str(*r.d_prime) << "\n";
  else if (r.d) out << "d = " << endpoints_str(*r.d) << "\n";
  if (r.g) out << "g = " << endpoints_str(*r.g) << "\n";
  if (r.residual) out << "residual: " << format_number(*r.residual) << "\n";
}

void print_failure(std::ostream& out, std::ostream& err, const SolveReport& r) {
  if (r.status == Status::SingularMatrix) {
    err << "error: matrix " << r.singular_matrix << " is singular; the " << to_string(r.method)
        << " method cannot solve this system\n";
  } else {
    out << kNoSolutionMessage << "\n";
  }
}

std::filesystem::path write_csv(const std::filesystem::path& dir, const std::string& name,
                                const FuzzyVector& v, std::span<const double> grid) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream csv(path);
  if (!csv) throw std::runtime_error("cannot write " + path.string());
  write_membership_csv(csv, v, grid);
  return path;
}

double max_deviation(const RawSolution& a, const RawSolution& b, std::span<const double> grid) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.lower.size(); ++i) {
    for (double z : grid) {
      worst = std::max(worst, std::abs(eval(a.lower[i], z) - eval(b.lower[i], z)));
      worst = std::max(worst, std::abs(eval(a.upper[i], z) - eval(b.upper[i], z)));
    }
  }
  return worst;
}

}  // namespace

SolveReport run(const FSLEProblem& problem, const RunConfig& cfg) {
  const SolveOptions opts = options_of(cfg);
  switch (cfg.method) {
    case MethodChoice::Friedman: return friedman_solve(problem, opts);
    case MethodChoice::Ezzati: return ezzati_solve(problem, opts);
    case MethodChoice::Embedding: return embedding_solve(problem, opts);
    case MethodChoice::Auto: return solve_auto(problem, opts);
  }
  return solve_auto(problem, opts);
}

int cmd_solve(const ProblemFile& file, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  const FSLEProblem problem = to_problem(file);
  const SolveReport r = run(problem, cfg);
  print_diagnostics(out, r);
  if (r.status == Status::Strong || r.status == Status::Weak) {
    if (r.status == Status::Weak) {
      out << "weak solution (min/max repair of the raw solution; it does not satisfy the "
             "system):\n";
    }
    print_solution(out, *r.solution);
    const auto path = write_csv(cfg.output_dir, "solution.csv", *r.solution,
                                solution_grid(*r.solution, cfg.grid_points));
    out << "wrote " << path.string() << "\n";
  } else {
    print_failure(out, err, r);
  }
  return exit_code_for(r.status);
}

int cmd_compare(const ProblemFile& file, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const FSLEProblem problem = to_problem(file);
  const SolveOptions opts = options_of(cfg);
  const auto model = model_by_name(cfg.model);
  if (!model) {
    err << "error: unknown cost model '" << cfg.model << "' (expected cubic or lu)\n";
    return exit_code::kInputError;
  }

  std::vector<Method> methods{Method::Friedman, Method::Ezzati, Method::Embedding};
  if (solve_auto(problem, opts).method == Method::EmbeddingTriangular) {
    methods.push_back(Method::EmbeddingTriangular);
  }

  const std::size_t n = problem.size();
  out << "n = " << n << "\n";
  out << std::left << std::setw(22) << "method" << std::setw(16) << "status" << std::right
      << std::setw(12) << "mults" << std::setw(14) << "residual" << "\n";
  std::vector<CountedSolve> runs;
  for (Method m : methods) {
    runs.push_back(counted_solve(problem, m, opts));
    const auto& r = runs.back().report;
    out << std::left << std::setw(22) << to_string(m) << std::setw(16) << to_string(r.status)
        << std::right << std::setw(12) << runs.back().multiplications << std::setw(14)
        << (r.residual ? format_number(*r.residual) : std::string("-")) << "\n";
  }

  const auto grid = uniform_grid(cfg.grid_points);
  std::optional<double> deviation;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      const auto& a = runs[i].report.raw;
      const auto& b = runs[j].report.raw;
      if (a && b) deviation = std::max(deviation.value_or(0.0), max_deviation(*a, *b, grid));
    }
  }
  out << "max pairwise raw deviation: "
      << (deviation ? format_number(*deviation) : std::string("n/a")) << "\n";

  if (n >= 2) {
    const OpCounts c = formula_counts(n, *model);
    out << "formula MNMO (" << model->name << ", h(n) = " << c.h << "): F = " << c.friedman
        << ", E = " << c.ezzati << ", D = " << c.embedding << " (rejected "
        << c.embedding_rejected << "), D_triangular = " << c.triangular << " (rejected "
        << c.triangular_rejected << ")\n";
  } else {
    out << "formula MNMO: defined for n >= 2 only\n";
  }
  return exit_code::kStrong;
}

int cmd_opcount(std::span<const std::uint64_t> sizes, std::string_view model_name,
                std::ostream& out, std::ostream& err) {
  if (sizes.empty()) {
    err << "usage: opcount --n N[,N...] [--model cubic|lu]\n";
    return exit_code::kInputError;
  }
  const auto model = model_by_name(model_name);
  if (!model) {
    err << "error: unknown cost model '" << model_name << "' (expected cubic or lu)\n";
    return exit_code::kInputError;
  }
  for (std::uint64_t n : sizes) {
    if (n < 2) {
      err << "error: operation counts need n >= 2 (got " << n << ")\n";
      return exit_code::kInputError;
    }
  }
  const char* headers[] = {"n",      "h",   "F",     "E",        "D",     "D_rej",
                           "D_tri",  "D_tri_rej",   "F-E",      "E-D",   "E-D_rej",
                           "E-D_tri", "E-D_tri_rej"};
  for (const char* h : headers) out << std::setw(12) << h;
  out << "\n";
  for (std::uint64_t n : sizes) {
    const OpCounts c = formula_counts(n, *model);
    const std::uint64_t row[] = {c.n,
                                 c.h,
                                 c.friedman,
                                 c.ezzati,
                                 c.embedding,
                                 c.embedding_rejected,
                                 c.triangular,
                                 c.triangular_rejected,
                                 c.friedman - c.ezzati,
                                 c.ezzati - c.embedding,
                                 c.ezzati - c.embedding_rejected,
                                 c.ezzati - c.triangular,
                                 c.ezzati - c.triangular_rejected};
    for (std::uint64_t v : row) out << std::setw(12) << v;
    out << "\n";
  }
  return exit_code::kStrong;
}

int cmd_plot(const ProblemFile& file, const RunConfig& cfg, std::ostream& out,
             std::ostream& err) {
  const FSLEProblem problem = to_problem(file);
  const SolveReport r = run(problem, cfg);
  out << "status: " << to_string(r.status) << "\n";
  if (r.status != Status::Strong && r.status != Status::Weak) {
    print_failure(out, err, r);
    return exit_code_for(r.status);
  }
  const FuzzyVector& v = *r.solution;
  const auto grid = solution_grid(v, cfg.grid_points);
  std::filesystem::create_directories(cfg.output_dir);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto path = cfg.output_dir / ("component_" + std::to_string(i + 1) + ".svg");
    std::ofstream svg(path);
    if (!svg) throw std::runtime_error("cannot write " + path.string());
    svg << membership_svg(v[i], grid, "v" + std::to_string(i + 1));
    out << "wrote " << path.string() << "\n";
  }
  out << "wrote " << write_csv(cfg.output_dir, "membership.csv", v, grid).string() << "\n";
  return exit_code_for(r.status);
}

}  // namespace fsle::cli
