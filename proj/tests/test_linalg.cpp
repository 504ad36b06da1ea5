// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "fsle/counted.hpp"
#include "fsle/lu.hpp"
#include "oracle.hpp"

using namespace fsle;

namespace {

double max_diff(const CrispMatrix& a, const CrispMatrix& b) { return max_abs(a - b); }

}  // namespace

TEST_CASE("LU of a small matrix") {
  const CrispMatrix a{{1, 1}, {1, 3}};
  const auto lu = lu_factor(a);
  REQUIRE(lu);
  CHECK(max_diff(lu->permutation() * a, lu->lower() * lu->upper()) == 0.0);
  const CrispMatrix u = lu->upper();
  CHECK(u(0, 0) * u(1, 1) == doctest::Approx(oracle::det(a)));
}

TEST_CASE("LU pivots on the largest entry") {
  const CrispMatrix a{{0, 1}, {2, 0}};
  const auto lu = lu_factor(a);
  REQUIRE(lu);
  CHECK(lu->perm() == std::vector<std::size_t>{1, 0});
  CHECK(lu->lower() == CrispMatrix::identity(2));
}

TEST_CASE("LU reports singular and rejects non-square input") {
  CHECK_FALSE(lu_factor(CrispMatrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(lu_factor(CrispMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  CHECK_FALSE(lu_factor(CrispMatrix(3, 3)));
  CHECK_THROWS_AS(lu_factor(CrispMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("solve against Cramer's rule") {
  const CrispMatrix bc{{1, 1}, {1, 3}};
  const auto lu = lu_factor(bc);
  REQUIRE(lu);
  const std::vector<double> rhs{2, 3};
  const auto x = lu->solve(std::span<const double>(rhs));
  CHECK(x[0] == doctest::Approx(1.5));
  CHECK(x[1] == doctest::Approx(0.5));
  const auto y = oracle::cramer(bc, rhs);
  CHECK(x[0] == doctest::Approx(y[0]));
  CHECK(x[1] == doctest::Approx(y[1]));

  const std::vector<double> zero{0, 0};
  const auto z = lu->solve(std::span<const double>(zero));
  CHECK(z == std::vector<double>{0, 0});
}

TEST_CASE("solve with an affine right-hand side") {
  // A = [[1,1],[1,2]], rhs = w_upper + w_lower = (6+2z, 8+2z)
  const auto lu = lu_factor(CrispMatrix{{1, 1}, {1, 2}});
  REQUIRE(lu);
  const AffineVector g = solve(*lu, AffineVector{{6, 2}, {8, 2}});
  CHECK(g[0].const_term == doctest::Approx(4));
  CHECK(g[0].slope == doctest::Approx(2));
  CHECK(g[1].const_term == doctest::Approx(2));
  CHECK(std::abs(g[1].slope) <= 1e-15);
}

TEST_CASE("inverse of small matrices") {
  const CrispMatrix inv = inverse(CrispMatrix{{1, -1}, {1, 3}});
  const CrispMatrix expected{{0.75, 0.25}, {-0.25, 0.25}};
  CHECK(max_diff(inv, expected) <= 1e-15);

  // |A| for the 3x3 system with no fuzzy solution
  const CrispMatrix abs3{{1, 1, 1}, {1, 2, 1}, {2, 1, 3}};
  const CrispMatrix inv3 = inverse(abs3);
  const CrispMatrix expected3{{5, -2, -1}, {-1, 1, 0}, {-3, 1, 1}};
  CHECK(max_diff(inv3, expected3) <= 1e-14);
  CHECK(max_diff(abs3 * inv3, CrispMatrix::identity(3)) <= 1e-14);

  CHECK(inverse(CrispMatrix::identity(4)) == CrispMatrix::identity(4));
  CHECK_THROWS_AS(inverse(CrispMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("check_finite") {
  CHECK_NOTHROW(check_finite(CrispMatrix{{1, 2}, {3, 4}}));
  CHECK_THROWS(check_finite(CrispMatrix{{1, std::numeric_limits<double>::infinity()}, {3, 4}}));
}

TEST_CASE("property: PA = LU on random matrices") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t n = 1; n <= 50; ++n) {
    CrispMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    const auto lu = lu_factor(a);
    REQUIRE(lu);
    const double err = max_diff(lu->permutation() * a, lu->lower() * lu->upper());
    CHECK(err <= 1e-12 * max_abs(a));
    // L is unit lower triangular with multipliers bounded by 1
    CHECK(max_abs(lu->lower()) <= 1.0);
  }
}

TEST_CASE("property: solutions match the Cramer oracle") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const CrispMatrix a = oracle::random_admissible_matrix(rng, n, -5, 5);
    std::vector<double> b(n);
    for (auto& x : b) x = std::uniform_int_distribution<int>(-9, 9)(rng);
    const auto lu = lu_factor(a);
    REQUIRE(lu);
    const auto x = lu->solve(std::span<const double>(b));
    const auto y = oracle::cramer(a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-9));
  }
}

TEST_CASE("property: inverse of the inverse") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t n = 2; n <= 12; ++n) {
    CrispMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
      a(i, i) += static_cast<double>(n);
    }
    CHECK(max_diff(inverse(inverse(a)), a) <= 1e-10 * max_abs(a));
  }
}

TEST_CASE("LU on counted scalars counts multiplications and divisions") {
  const CrispMatrix a{{4, 1, 2}, {1, 5, 1}, {2, 1, 6}};
  MultiplicationCounter counter;
  const auto lu = lu_factor(a.cast<CountedReal>());
  REQUIRE(lu);
  // n = 3: 3 divisions for the multipliers, 2*2 + 1*1 updates
  CHECK(counter.count() == 8);
  CHECK(max_diff(lu->upper().cast<double>(), lu_factor(a)->upper()) == 0.0);
}

TEST_CASE("counter scope") {
  CountedReal x = 3.0;
  {
    MultiplicationCounter outer;
    x = x * 2.0;
    {
      MultiplicationCounter inner;
      x = x / 3.0;
      x = x + 1.0;
      CHECK(inner.count() == 1);
    }
    x = x - 1.0;
    CHECK(outer.count() == 1);
  }
  CHECK(to_double(x) == doctest::Approx(2.0));
}
