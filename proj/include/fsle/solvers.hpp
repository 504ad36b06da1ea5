// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FSLE_SOLVERS_HPP
#define FSLE_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fsle/fuzzy.hpp"
#include "fsle/matrix.hpp"

namespace fsle {

enum class Method { Friedman, Ezzati, Embedding, EmbeddingTriangular };

enum class Status { Strong, Weak, NotFuzzy, RejectedEarly, SingularMatrix };

/// Min/max repair applied to a raw solution that is not a fuzzy vector.
/// Friedman: both endpoints over {lower(z), upper(z), lower(1), upper(1)}.
/// Ezzati: lower over {lower(z), upper(z), lower(1)}, upper over
/// {lower(z), upper(z), upper(1)}.
enum class WeakRule { Friedman, Ezzati };

std::string_view to_string(Method m);
std::string_view to_string(Status s);
std::string_view to_string(WeakRule r);

class NotTriangularError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A x~ = w~ with crisp n x n matrix A and fuzzy right-hand side w~.
/// Sampled right-hand-side entries must share one grid; affine entries
/// mixed with sampled ones are evaluated on that grid.
class FSLEProblem {
 public:
  FSLEProblem(CrispMatrix a, FuzzyVector w);

  const CrispMatrix& a() const { return a_; }
  const FuzzyVector& w() const { return w_; }
  std::size_t size() const { return a_.rows(); }

 private:
  CrispMatrix a_;
  FuzzyVector w_;
};

struct SolveOptions {
  double tolerance = kDefaultTolerance;
  std::size_t grid_points = kDefaultGridPoints;
  /// Overrides the weak rule of the Friedman and Ezzati methods.
  std::optional<WeakRule> weak_rule;
};

/// Unclassified solver output: the lower and upper endpoint of every
/// component, as computed.
struct RawSolution {
  std::vector<Endpoint> lower;
  std::vector<Endpoint> upper;

  FuzzyVector as_fuzzy() const;
};

struct SolveReport {
  Method method = Method::Embedding;
  Status status = Status::NotFuzzy;
  /// The raw solution when Strong; the repaired candidate when Weak.
  std::optional<FuzzyVector> solution;
  std::optional<RawSolution> raw;
  std::optional<FuzzyVector> weak_solution;

  /// upper - lower as obtained from (B+C) d = w_upper - w_lower.
  std::optional<std::vector<Endpoint>> d;
  /// upper + lower as obtained from A g = w_upper + w_lower.
  std::optional<std::vector<Endpoint>> g;
  /// Crisp spread vector of the triangular path, d(z) = d'(1 - z).
  std::optional<CrispVector> d_prime;
  std::optional<double> residual;
  /// Filled by counted_solve.
  std::optional<std::uint64_t> multiplications;
  /// "S", "A" or "B+C" when status is SingularMatrix.
  std::string singular_matrix;
};

/// Friedman's 2n x 2n embedding S v = w with v = (lower, -upper).
SolveReport friedman_solve(const FSLEProblem& p, const SolveOptions& opts = {});

/// Ezzati's reduction: A g = w_upper + w_lower, then
/// (B+C) lower = w_lower + C g and (B+C) upper = w_upper + C g.
SolveReport ezzati_solve(const FSLEProblem& p, const SolveOptions& opts = {});

/// Two crisp n x n systems with early rejection:
///   (B+C) d = w_upper - w_lower; reject if some d_i < 0 on [0, 1];
///   A g = w_upper + w_lower; lower = (g - d) / 2, upper = (g + d) / 2.
SolveReport embedding_solve(const FSLEProblem& p, const SolveOptions& opts = {});

/// Triangular right-hand side: d' from one crisp solve (B+C) d' = mu + rho,
/// then lower = (g - d'(1-z)) / 2, upper = (g + d'(1-z)) / 2.
/// Throws NotTriangularError if some w_i is not triangular.
SolveReport triangular_embedding_solve(const FSLEProblem& p, const SolveOptions& opts = {});

/// Triangular path when every w_i is triangular, general embedding otherwise.
SolveReport solve_auto(const FSLEProblem& p, const SolveOptions& opts = {});

SolveReport solve(const FSLEProblem& p, Method method, const SolveOptions& opts = {});

struct Classification {
  Status status = Status::NotFuzzy;  // Strong, Weak or NotFuzzy
  std::optional<FuzzyVector> candidate;
};

/// Strong if every raw component is a valid fuzzy number, otherwise the
/// min/max candidate under `rule`: Weak if that candidate is valid,
/// NotFuzzy if not. Candidates are sampled on `grid` (or on the raw
/// solution's own grid when it is sampled).
Classification classify(const RawSolution& raw, WeakRule rule, std::span<const double> grid,
                        double tol = kDefaultTolerance);

/// The right-hand side as triangular numbers, or nullopt.
std::optional<std::vector<TriangularFuzzy>> as_triangular(const FuzzyVector& w,
                                                          double tol = kDefaultTolerance);

}  // namespace fsle

#endif  // FSLE_SOLVERS_HPP
