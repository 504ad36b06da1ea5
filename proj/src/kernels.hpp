// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

// Scalar-generic solver kernels shared by the plain solvers and the
// instrumented (multiplication counting) runs. Not installed.

#ifndef FSLE_SRC_KERNELS_HPP
#define FSLE_SRC_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "fsle/counted.hpp"
#include "fsle/lu.hpp"
#include "fsle/solvers.hpp"
#include "fsle/splitting.hpp"

namespace fsle::detail {

/// How the columns of an endpoint block are read. Affine: column 0 holds
/// constant terms, column 1 slopes. Sampled: column k holds values at
/// grid[k]. Both readings are linear, so crisp solves act column-wise.
struct Carrier {
  bool affine = true;
  std::vector<double> grid;

  std::size_t columns() const { return affine ? 2 : grid.size(); }
};

Carrier carrier_of(const FuzzyVector& w);

template <class T>
Matrix<T> to_block(const FuzzyVector& w, bool upper, const Carrier& c) {
  Matrix<T> out(w.size(), c.columns());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Endpoint& e = upper ? w[i].upper : w[i].lower;
    if (c.affine) {
      const auto& f = std::get<AffineZ>(e);
      out(i, 0) = T(f.const_term);
      out(i, 1) = T(f.slope);
    } else {
      for (std::size_t k = 0; k < c.grid.size(); ++k) {
        out(i, k) = T(eval(e, c.grid[k]));
      }
    }
  }
  return out;
}

std::vector<Endpoint> from_block(const CrispMatrix& block, const Carrier& c);

/// True if some row of `d` drops below -tol anywhere on [0, 1]. For the
/// affine carrier the two ends z = 0 and z = 1 decide it exactly.
template <class T>
bool has_negative(const Matrix<T>& d, const Carrier& c, double tol) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (c.affine) {
      const double at0 = to_double(d(i, 0));
      const double at1 = at0 + to_double(d(i, 1));
      if (at0 < -tol || at1 < -tol) return true;
    } else {
      for (std::size_t k = 0; k < d.cols(); ++k) {
        if (to_double(d(i, k)) < -tol) return true;
      }
    }
  }
  return false;
}

enum class Outcome { Solved, Rejected, Singular };

template <class T>
struct KernelResult {
  Outcome outcome = Outcome::Solved;
  std::string singular;
  Matrix<T> lower;
  Matrix<T> upper;
  std::optional<Matrix<T>> d;
  std::optional<Matrix<T>> g;
  std::optional<std::vector<T>> d_prime;
};

template <class T>
struct KernelInput {
  Matrix<T> a;
  Matrix<T> w_lower;
  Matrix<T> w_upper;
  Carrier carrier;
  std::vector<T> spread_sum;  // mu_i + rho_i, triangular path only
  double tol = kDefaultTolerance;
};

template <class T>
KernelResult<T> singular(std::string which) {
  KernelResult<T> r;
  r.outcome = Outcome::Singular;
  r.singular = std::move(which);
  return r;
}

template <class T>
KernelResult<T> friedman_kernel(const KernelInput<T>& in) {
  const std::size_t n = in.a.rows();
  const std::size_t m = in.carrier.columns();
  const auto lu = lu_factor(build_s(split_bc(in.a)));
  if (!lu) return singular<T>("S");
  Matrix<T> rhs(2 * n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      rhs(i, k) = in.w_lower(i, k);
      rhs(i + n, k) = -in.w_upper(i, k);
    }
  }
  const Matrix<T> x = lu->solve(rhs);
  KernelResult<T> r;
  r.lower = Matrix<T>(n, m);
  r.upper = Matrix<T>(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      r.lower(i, k) = x(i, k);
      r.upper(i, k) = -x(i + n, k);
    }
  }
  return r;
}

template <class T>
KernelResult<T> ezzati_kernel(const KernelInput<T>& in) {
  const auto split = split_bc(in.a);
  const auto lu_a = lu_factor(in.a);
  if (!lu_a) return singular<T>("A");
  const auto lu_bc = lu_factor(sum_bc(split));
  if (!lu_bc) return singular<T>("B+C");
  KernelResult<T> r;
  r.g = lu_a->solve(in.w_upper + in.w_lower);
  const Matrix<T> cg = split.c * *r.g;
  r.lower = lu_bc->solve(in.w_lower + cg);
  r.upper = lu_bc->solve(in.w_upper + cg);
  return r;
}

template <class T>
KernelResult<T> embedding_kernel(const KernelInput<T>& in) {
  const auto split = split_bc(in.a);
  const auto lu_bc = lu_factor(sum_bc(split));
  if (!lu_bc) return singular<T>("B+C");
  KernelResult<T> r;
  r.d = lu_bc->solve(in.w_upper - in.w_lower);
  if (has_negative(*r.d, in.carrier, in.tol)) {
    r.outcome = Outcome::Rejected;
    return r;
  }
  // A is only needed once the spread test has passed.
  const auto lu_a = lu_factor(in.a);
  if (!lu_a) {
    auto s = singular<T>("A");
    s.d = std::move(r.d);
    return s;
  }
  r.g = lu_a->solve(in.w_upper + in.w_lower);
  const T half(0.5);
  r.lower = half * (*r.g - *r.d);
  r.upper = half * (*r.g + *r.d);
  return r;
}

template <class T>
KernelResult<T> triangular_kernel(const KernelInput<T>& in) {
  const std::size_t n = in.a.rows();
  const auto split = split_bc(in.a);
  const auto lu_bc = lu_factor(sum_bc(split));
  if (!lu_bc) return singular<T>("B+C");
  KernelResult<T> r;
  r.d_prime = lu_bc->solve(std::span<const T>(in.spread_sum));
  const auto& dp = *r.d_prime;
  r.d = Matrix<T>(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    (*r.d)(i, 0) = dp[i];
    (*r.d)(i, 1) = -dp[i];
  }
  for (const T& x : dp) {
    if (to_double(x) < -in.tol) {
      r.outcome = Outcome::Rejected;
      return r;
    }
  }
  const auto lu_a = lu_factor(in.a);
  if (!lu_a) {
    auto s = singular<T>("A");
    s.d = std::move(r.d);
    s.d_prime = std::move(r.d_prime);
    return s;
  }
  r.g = lu_a->solve(in.w_upper + in.w_lower);
  const auto& g = *r.g;
  const T half(0.5);
  r.lower = Matrix<T>(n, 2);
  r.upper = Matrix<T>(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    r.lower(i, 0) = half * (g(i, 0) - dp[i]);
    r.lower(i, 1) = half * (g(i, 1) + dp[i]);
    r.upper(i, 0) = half * (g(i, 0) + dp[i]);
    r.upper(i, 1) = half * (g(i, 1) - dp[i]);
  }
  return r;
}

template <class T>
KernelResult<double> to_double_result(const KernelResult<T>& r) {
  KernelResult<double> out;
  out.outcome = r.outcome;
  out.singular = r.singular;
  out.lower = r.lower.template cast<double>();
  out.upper = r.upper.template cast<double>();
  if (r.d) out.d = r.d->template cast<double>();
  if (r.g) out.g = r.g->template cast<double>();
  if (r.d_prime) {
    out.d_prime = std::vector<double>();
    for (const T& x : *r.d_prime) out.d_prime->push_back(to_double(x));
  }
  return out;
}

/// Classification and diagnostics common to every method.
SolveReport finish_report(const FSLEProblem& p, Method method, const KernelResult<double>& r,
                          const Carrier& carrier, const SolveOptions& opts);

/// Runs `method` with scalar type T. When `mults` is non-null the
/// multiplications and divisions of the kernel (not of the classification)
/// are stored there; this requires T = CountedReal.
template <class T>
SolveReport run_method(const FSLEProblem& p, Method method, const SolveOptions& opts,
                       std::uint64_t* mults = nullptr) {
  const Carrier carrier = carrier_of(p.w());
  KernelInput<T> in;
  in.a = p.a().template cast<T>();
  in.carrier = carrier;
  in.tol = opts.tolerance;
  if (method == Method::EmbeddingTriangular) {
    const auto tri = as_triangular(p.w(), opts.tolerance);
    if (!tri || !carrier.affine) {
      throw NotTriangularError("right-hand side is not a triangular fuzzy vector");
    }
    // Rebuild the blocks from (c, mu, rho) so they are exactly triangular.
    FuzzyVector w;
    for (const auto& t : *tri) {
      w.push_back(triangular_to_parametric(t));
      in.spread_sum.push_back(T(t.left_spread) + T(t.right_spread));
    }
    in.w_lower = to_block<T>(w, false, carrier);
    in.w_upper = to_block<T>(w, true, carrier);
  } else {
    in.w_lower = to_block<T>(p.w(), false, carrier);
    in.w_upper = to_block<T>(p.w(), true, carrier);
  }

  KernelResult<T> result;
  {
    std::optional<MultiplicationCounter> counter;
    if constexpr (std::is_same_v<T, CountedReal>) {
      if (mults != nullptr) counter.emplace();
    }
    switch (method) {
      case Method::Friedman: result = friedman_kernel(in); break;
      case Method::Ezzati: result = ezzati_kernel(in); break;
      case Method::Embedding: result = embedding_kernel(in); break;
      case Method::EmbeddingTriangular: result = triangular_kernel(in); break;
    }
    if (counter) *mults = counter->count();
  }
  SolveReport report = finish_report(p, method, to_double_result(result), carrier, opts);
  if (mults != nullptr) report.multiplications = *mults;
  return report;
}

}  // namespace fsle::detail

#endif  // FSLE_SRC_KERNELS_HPP
