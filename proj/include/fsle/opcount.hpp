// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_OPCOUNT_HPP
#define FSLE_OPCOUNT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "fsle/solvers.hpp"

namespace fsle {

/// Maximum-multiplication cost of inverting one n x n matrix, h(n).
struct CostModel {
  std::string name;
  std::function<std::uint64_t(std::uint64_t)> inversion_cost;
};

/// h(n) = n^3.
CostModel cubic_model();
/// h(n) = floor(n^3 / 3) + n^2.
CostModel lu_model();
/// "cubic" or "lu".
std::optional<CostModel> model_by_name(std::string_view name);

/// Maximum multiplication counts of the three methods on an n x n system
/// with affine endpoints:
///   Friedman                 F = 2h + 8n^2
///   Ezzati                   E = 2h + 6n^2
///   embedding, general       D = 2h + 4n^2, rejected: h + 2n^2
///   embedding, triangular    D = 2h + 3n^2 + n, rejected: h + n^2
struct OpCounts {
  std::uint64_t n = 0;
  std::uint64_t h = 0;
  std::uint64_t friedman = 0;
  std::uint64_t ezzati = 0;
  std::uint64_t embedding = 0;
  std::uint64_t embedding_rejected = 0;
  std::uint64_t triangular = 0;
  std::uint64_t triangular_rejected = 0;
};

/// Throws std::invalid_argument for n < 2.
OpCounts formula_counts(std::uint64_t n, const CostModel& model);

struct CountedSolve {
  SolveReport report;
  std::uint64_t multiplications = 0;
};

/// Runs `method` on instrumented scalars and counts every multiplication and
/// division the solve performs (classification excluded). The counter lives
/// only for this call.
CountedSolve counted_solve(const FSLEProblem& p, Method method, const SolveOptions& opts = {});

}  // namespace fsle

#endif  // FSLE_OPCOUNT_HPP
