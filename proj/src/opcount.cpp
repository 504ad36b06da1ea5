// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/opcount.hpp"

#include <stdexcept>

#include "fsle/counted.hpp"
#include "kernels.hpp"

namespace fsle {

CostModel cubic_model() {
  return {"cubic", [](std::uint64_t n) { return n * n * n; }};
}

CostModel lu_model() {
  return {"lu", [](std::uint64_t n) { return n * n * n / 3 + n * n; }};
}

std::optional<CostModel> model_by_name(std::string_view name) {
  if (name == "cubic") return cubic_model();
  if (name == "lu") return lu_model();
  return std::nullopt;
}

OpCounts formula_counts(std::uint64_t n, const CostModel& model) {
  if (n < 2) {
    throw std::invalid_argument("operation counts are defined for n >= 2");
  }
  const std::uint64_t h = model.inversion_cost(n);
  const std::uint64_t n2 = n * n;
  OpCounts c;
  c.n = n;
  c.h = h;
  c.friedman = 2 * h + 8 * n2;
  c.ezzati = 2 * h + 6 * n2;
  c.embedding = 2 * h + 4 * n2;
  c.embedding_rejected = h + 2 * n2;
  c.triangular = 2 * h + 3 * n2 + n;
  c.triangular_rejected = h + n2;
  return c;
}

CountedSolve counted_solve(const FSLEProblem& p, Method method, const SolveOptions& opts) {
  std::uint64_t mults = 0;
  SolveReport report = detail::run_method<CountedReal>(p, method, opts, &mults);
  return {std::move(report), mults};
}

}  // namespace fsle
