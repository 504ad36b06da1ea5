// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kernels.hpp"

namespace fsle {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Friedman: return "friedman";
    case Method::Ezzati: return "ezzati";
    case Method::Embedding: return "embedding";
    case Method::EmbeddingTriangular: return "embedding-triangular";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Strong: return "Strong";
    case Status::Weak: return "Weak";
    case Status::NotFuzzy: return "NotFuzzy";
    case Status::RejectedEarly: return "RejectedEarly";
    case Status::SingularMatrix: return "SingularMatrix";
  }
  return "?";
}

std::string_view to_string(WeakRule r) {
  return r == WeakRule::Friedman ? "friedman" : "ezzati";
}

FSLEProblem::FSLEProblem(CrispMatrix a, FuzzyVector w) : a_(std::move(a)), w_(std::move(w)) {
  if (!a_.square() || a_.rows() == 0) {
    throw std::invalid_argument("coefficient matrix must be square and non-empty");
  }
  if (w_.size() != a_.rows()) {
    throw std::invalid_argument("right-hand side has " + std::to_string(w_.size()) +
                                " entries, matrix has " + std::to_string(a_.rows()) + " rows");
  }
  check_finite(a_);
  // Validates that sampled entries share a grid.
  (void)detail::carrier_of(w_);
}

FuzzyVector RawSolution::as_fuzzy() const {
  FuzzyVector out;
  out.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    out.push_back(FuzzyNumber{lower[i], upper[i]});
  }
  return out;
}

std::optional<std::vector<TriangularFuzzy>> as_triangular(const FuzzyVector& w, double tol) {
  std::vector<TriangularFuzzy> out;
  out.reserve(w.size());
  for (const auto& p : w) {
    auto t = parametric_to_triangular(p, tol);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  return out;
}

namespace {

const std::vector<double>* sampled_grid(const std::vector<Endpoint>& endpoints) {
  for (const auto& e : endpoints) {
    if (const auto* s = std::get_if<SampledZ>(&e)) return &s->grid();
  }
  return nullptr;
}

}  // namespace

Classification classify(const RawSolution& raw, WeakRule rule, std::span<const double> grid,
                        double tol) {
  Classification out;
  bool strong = true;
  for (std::size_t i = 0; i < raw.lower.size(); ++i) {
    if (!validate_fuzzy_number({raw.lower[i], raw.upper[i]}, grid, tol).valid()) {
      strong = false;
      break;
    }
  }
  if (strong) {
    out.status = Status::Strong;
    return out;
  }

  std::vector<double> levels(grid.begin(), grid.end());
  if (const auto* g = sampled_grid(raw.lower)) levels = *g;
  else if (const auto* g2 = sampled_grid(raw.upper)) levels = *g2;
  check_grid(levels);

  FuzzyVector candidate;
  bool valid = true;
  for (std::size_t i = 0; i < raw.lower.size(); ++i) {
    const double lo1 = eval(raw.lower[i], 1.0);
    const double up1 = eval(raw.upper[i], 1.0);
    std::vector<double> lo(levels.size());
    std::vector<double> up(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const double l = eval(raw.lower[i], levels[k]);
      const double u = eval(raw.upper[i], levels[k]);
      if (rule == WeakRule::Friedman) {
        lo[k] = std::min({l, u, lo1, up1});
        up[k] = std::max({l, u, lo1, up1});
      } else {
        lo[k] = std::min({l, u, lo1});
        up[k] = std::max({l, u, up1});
      }
    }
    FuzzyNumber p{SampledZ(levels, std::move(lo)), SampledZ(levels, std::move(up))};
    valid = valid && validate_fuzzy_number(p, levels, tol).valid();
    candidate.push_back(std::move(p));
  }
  out.status = valid ? Status::Weak : Status::NotFuzzy;
  out.candidate = std::move(candidate);
  return out;
}

namespace detail {

Carrier carrier_of(const FuzzyVector& w) {
  Carrier c;
  for (const auto& p : w) {
    for (const Endpoint* e : {&p.lower, &p.upper}) {
      if (const auto* s = std::get_if<SampledZ>(e)) {
        if (c.affine) {
          c.affine = false;
          c.grid = s->grid();
        } else if (c.grid != s->grid()) {
          throw std::invalid_argument("sampled right-hand-side entries use different grids");
        }
      }
    }
  }
  return c;
}

std::vector<Endpoint> from_block(const CrispMatrix& block, const Carrier& c) {
  std::vector<Endpoint> out;
  out.reserve(block.rows());
  for (std::size_t i = 0; i < block.rows(); ++i) {
    if (c.affine) {
      out.emplace_back(AffineZ{block(i, 0), block(i, 1)});
    } else {
      const auto row = block.row(i);
      out.emplace_back(SampledZ(c.grid, std::vector<double>(row.begin(), row.end())));
    }
  }
  return out;
}

SolveReport finish_report(const FSLEProblem& p, Method method, const KernelResult<double>& r,
                          const Carrier& carrier, const SolveOptions& opts) {
  SolveReport rep;
  rep.method = method;
  if (r.d) rep.d = from_block(*r.d, carrier);
  if (r.g) rep.g = from_block(*r.g, carrier);
  if (r.d_prime) rep.d_prime = *r.d_prime;

  switch (r.outcome) {
    case Outcome::Singular:
      rep.status = Status::SingularMatrix;
      rep.singular_matrix = r.singular;
      return rep;
    case Outcome::Rejected:
      rep.status = Status::RejectedEarly;
      return rep;
    case Outcome::Solved:
      break;
  }

  RawSolution raw{from_block(r.lower, carrier), from_block(r.upper, carrier)};
  const std::vector<double> grid =
      carrier.affine ? uniform_grid(opts.grid_points) : carrier.grid;
  const FuzzyVector raw_fuzzy = raw.as_fuzzy();
  rep.residual = fuzzy_residual(p.a(), raw_fuzzy, p.w(), grid);
  rep.raw = raw;

  const bool weak_capable = method == Method::Friedman || method == Method::Ezzati;
  const WeakRule rule = opts.weak_rule.value_or(
      method == Method::Friedman ? WeakRule::Friedman : WeakRule::Ezzati);
  const Classification cls = classify(raw, rule, grid, opts.tolerance);

  if (cls.status == Status::Strong) {
    if (*rep.residual <= opts.tolerance) {
      rep.status = Status::Strong;
      rep.solution = raw_fuzzy;
    } else {
      rep.status = Status::NotFuzzy;
    }
  } else if (weak_capable && cls.status == Status::Weak) {
    rep.status = Status::Weak;
    rep.solution = cls.candidate;
    rep.weak_solution = cls.candidate;
  } else {
    rep.status = Status::NotFuzzy;
  }
  return rep;
}

}  // namespace detail

SolveReport friedman_solve(const FSLEProblem& p, const SolveOptions& opts) {
  return detail::run_method<double>(p, Method::Friedman, opts);
}

SolveReport ezzati_solve(const FSLEProblem& p, const SolveOptions& opts) {
  return detail::run_method<double>(p, Method::Ezzati, opts);
}

SolveReport embedding_solve(const FSLEProblem& p, const SolveOptions& opts) {
  return detail::run_method<double>(p, Method::Embedding, opts);
}

SolveReport triangular_embedding_solve(const FSLEProblem& p, const SolveOptions& opts) {
  return detail::run_method<double>(p, Method::EmbeddingTriangular, opts);
}

SolveReport solve_auto(const FSLEProblem& p, const SolveOptions& opts) {
  const bool triangular =
      detail::carrier_of(p.w()).affine && as_triangular(p.w(), opts.tolerance).has_value();
  return triangular ? triangular_embedding_solve(p, opts) : embedding_solve(p, opts);
}

SolveReport solve(const FSLEProblem& p, Method method, const SolveOptions& opts) {
  return detail::run_method<double>(p, method, opts);
}

}  // namespace fsle
