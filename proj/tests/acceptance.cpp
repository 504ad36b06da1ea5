// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fsle/cli/commands.hpp"
#include "fsle/cli/problem_file.hpp"
#include "fsle/lu.hpp"
#include "fsle/opcount.hpp"
#include "fsle/solvers.hpp"
#include "fsle/splitting.hpp"
#include "oracle.hpp"
#include "svg_probe.hpp"

using namespace fsle;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

FuzzyNumber affine(double lc, double ls, double uc, double us) {
  return {AffineZ{lc, ls}, AffineZ{uc, us}};
}

FSLEProblem example1() {
  return {CrispMatrix{{1, -1}, {1, 3}}, {affine(0, 1, 2, -1), affine(4, 1, 7, -2)}};
}

FSLEProblem example2() {
  return {CrispMatrix{{1, 1, -1}, {1, -2, 1}, {2, 1, 3}},
          {affine(0, 1, 2, -1), affine(2, 1, 3, 0), affine(-2, 0, -1, -1)}};
}

FSLEProblem example3() {
  return {CrispMatrix{{1, 1}, {1, 2}}, {affine(0, 4, 6, -2), affine(0, 5, 8, -3)}};
}

double coeff_error(const Endpoint& e, double c, double s) {
  if (!is_affine(e)) return INFINITY;
  const auto& a = std::get<AffineZ>(e);
  return std::max(std::abs(a.const_term - c), std::abs(a.slope - s));
}

bool raw_valid(const RawSolution& r) {
  const auto grid = uniform_grid(kDefaultGridPoints);
  for (std::size_t i = 0; i < r.lower.size(); ++i) {
    if (!validate_fuzzy_number({r.lower[i], r.upper[i]}, grid).valid()) return false;
  }
  return true;
}

double max_dev(const RawSolution& a, const RawSolution& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.lower.size(); ++i) {
    for (double z : uniform_grid(kDefaultGridPoints)) {
      worst = std::max(worst, std::abs(eval(a.lower[i], z) - eval(b.lower[i], z)));
      worst = std::max(worst, std::abs(eval(a.upper[i], z) - eval(b.upper[i], z)));
    }
  }
  return worst;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Strong reports gathered from criteria 1-5, checked by criterion 6.
std::vector<std::pair<FSLEProblem, SolveReport>> g_strong;

void keep_if_strong(const FSLEProblem& p, const SolveReport& r) {
  if (r.status == Status::Strong) g_strong.emplace_back(p, r);
}

// Criterion-5 corpus, reused by criterion 7.
std::vector<FSLEProblem> g_corpus;

Outcome example1_golden() {
  const FSLEProblem p = example1();
  const Method methods[] = {Method::Friedman, Method::Ezzati, Method::Embedding};
  double worst = 0;
  bool strong = true;
  for (Method m : methods) {
    const SolveReport r = solve(p, m);
    keep_if_strong(p, r);
    if (r.status != Status::Strong) {
      strong = false;
      continue;
    }
    const FuzzyVector& v = *r.solution;
    worst = std::max({worst, coeff_error(v[0].lower, 1.375, 0.625),
                      coeff_error(v[0].upper, 2.875, -0.875), coeff_error(v[1].lower, 0.875, 0.125),
                      coeff_error(v[1].upper, 1.375, -0.375)});
  }
  std::vector<double> times;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = Clock::now();
    for (Method m : methods) (void)solve(p, m);
    times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  std::sort(times.begin(), times.end());
  const double ms = times[times.size() / 2];
  return {strong && worst <= 1e-12 && ms < 1.0,
          "3 methods Strong=" + std::string(strong ? "yes" : "no") +
              ", max coefficient error " + fmt("%.3g", worst) + ", runtime " + fmt("%.3f", ms) +
              " ms"};
}

Outcome example2_golden() {
  const FSLEProblem p = example2();
  const SolveReport tri = solve_auto(p);
  const SolveReport gen = embedding_solve(p);
  const bool rejected = tri.method == Method::EmbeddingTriangular &&
                        tri.status == Status::RejectedEarly &&
                        gen.status == Status::RejectedEarly && tri.d_prime.has_value();
  double d_err = INFINITY;
  bool negative = false;
  if (tri.d_prime) {
    const auto& d = *tri.d_prime;
    d_err = std::max({std::abs(d[0] - 7), std::abs(d[1] + 1), std::abs(d[2] + 4)});
    negative = std::any_of(d.begin(), d.end(), [](double x) { return x < 0; });
  }
  const CrispMatrix bc = sum_bc(split_bc(p.a()));
  const CrispMatrix m = inverse(bc);
  const double id_err = max_abs(bc * m - CrispMatrix::identity(3));
  const CrispMatrix printed{{5, -1, -3}, {-2, 1, 1}, {-1, 0, 1}};
  const std::vector<double> d1{2, 1, 1};
  const auto from_printed = printed * std::span<const double>(d1);
  const bool transposed = max_abs(transpose(printed) - m) <= 1e-12;
  return {rejected && negative && d_err <= 1e-12 && id_err <= 1e-12,
          "RejectedEarly, d' = (7,-1,-4) within " + fmt("%.3g", d_err) + ", (B+C)M - I = " +
              fmt("%.3g", id_err) + "; note: the printed M is the transpose of the true inverse (" +
              (transposed ? "confirmed" : "NOT confirmed") + ") and gives (" +
              fmt("%g", from_printed[0]) + "," + fmt("%g", from_printed[1]) + "," +
              fmt("%g", from_printed[2]) + ")"};
}

Outcome example3_golden() {
  const FSLEProblem p = example3();
  const SolveReport r = embedding_solve(p);
  keep_if_strong(p, r);
  if (r.status != Status::Strong || !r.d || !r.g) return {false, "not Strong"};
  const auto& d = *r.d;
  const auto& g = *r.g;
  const FuzzyVector& v = *r.solution;
  const double err = std::max(
      {coeff_error(d[0], 4, -4), coeff_error(d[1], 2, -2), coeff_error(g[0], 4, 2),
       coeff_error(g[1], 2, 0), coeff_error(v[0].lower, 0, 3), coeff_error(v[0].upper, 4, -1),
       coeff_error(v[1].lower, 0, 1), coeff_error(v[1].upper, 2, -1)});
  return {err <= 1e-12, "Strong, max error over d, g, v = " + fmt("%.3g", err)};
}

Outcome formula_identities() {
  int checked = 0;
  int failed = 0;
  for (const CostModel& model : {cubic_model(), lu_model()}) {
    for (std::uint64_t n = 2; n <= 64; ++n) {
      const OpCounts c = formula_counts(n, model);
      const bool ok = c.friedman - c.ezzati == 2 * n * n &&
                      c.ezzati - c.embedding == 2 * n * n &&
                      c.ezzati - c.embedding_rejected == c.h + 4 * n * n &&
                      c.ezzati - c.triangular == 3 * n * n - n &&
                      c.ezzati - c.triangular_rejected == c.h + 5 * n * n;
      ++checked;
      if (!ok) ++failed;
    }
  }
  return {failed == 0, std::to_string(checked - failed) + "/" + std::to_string(checked) +
                           " (n, model) pairs exact"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> center(-5.0, 5.0);
  std::uniform_real_distribution<double> spread(0.0, 3.0);
  const auto t0 = Clock::now();
  int valid = 0;
  int rejected = 0;
  int violations = 0;
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const CrispMatrix a = oracle::random_admissible_matrix(rng, n, -5, 5);
    FuzzyVector w;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(triangular_to_parametric({center(rng), spread(rng), spread(rng)}));
    }
    const FSLEProblem p{a, w};
    g_corpus.push_back(p);
    const SolveReport f = friedman_solve(p);
    const SolveReport d = embedding_solve(p);
    const SolveReport e = ezzati_solve(p);
    keep_if_strong(p, f);
    keep_if_strong(p, d);
    keep_if_strong(p, e);
    if (!f.raw) {
      ++violations;
      continue;
    }
    if (raw_valid(*f.raw)) {
      ++valid;
      if (d.status != Status::Strong || e.status != Status::Strong) {
        ++violations;
        continue;
      }
      worst = std::max({worst, max_dev(*f.raw, *d.raw), max_dev(*f.raw, *e.raw)});
    }
    if (d.status == Status::RejectedEarly) {
      ++rejected;
      if (raw_valid(*f.raw)) ++violations;
    }
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return {violations == 0 && worst <= 1e-9 && s < 10.0,
          "500 systems: " + std::to_string(valid) + " Friedman-valid, " +
              std::to_string(rejected) + " rejected early, " + std::to_string(violations) +
              " violations, max deviation " + fmt("%.3g", worst) + ", " + fmt("%.2f", s) + " s"};
}

Outcome residuals() {
  const auto grid = uniform_grid(kDefaultGridPoints);
  double worst = 0;
  for (const auto& [p, r] : g_strong) {
    const FuzzyVector& v = *r.solution;
    worst = std::max(worst, fuzzy_residual(p.a(), v, p.w(), grid));
    // independent check from the sign rule, on affine data
    const FuzzyVector av = oracle::apply(p.a(), v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (double z : grid) {
        worst = std::max(worst, std::abs(eval(av[i].lower, z) - eval(p.w()[i].lower, z)));
        worst = std::max(worst, std::abs(eval(av[i].upper, z) - eval(p.w()[i].upper, z)));
      }
    }
  }
  return {!g_strong.empty() && worst <= 1e-9,
          std::to_string(g_strong.size()) + " Strong reports, max residual " + fmt("%.3g", worst)};
}

Outcome block_inverse_property() {
  double worst = 0;
  int missing = 0;
  for (const FSLEProblem& p : g_corpus) {
    const BCSplit s = split_bc(p.a());
    const auto inv = block_inverse(s);
    if (!inv) {
      ++missing;
      continue;
    }
    const std::size_t n = p.size();
    worst = std::max(worst, max_abs(assemble(*inv) * build_s(s) - CrispMatrix::identity(2 * n)));
  }
  return {!g_corpus.empty() && missing == 0 && worst <= 1e-9,
          std::to_string(g_corpus.size()) + " systems, max |[[D,E],[E,D]] S - I| = " +
              fmt("%.3g", worst)};
}

Outcome measured_ordering() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_real_distribution<double> center(-5.0, 5.0);
  std::uniform_real_distribution<double> spread(0.0, 3.0);
  int trials = 0;
  int ordered = 0;
  int unsolved = 0;
  std::string per_n;
  for (std::size_t n : {4, 8, 16}) {
    int n_ordered = 0;
    for (int t = 0; t < 100; ++t) {
      CrispMatrix a;
      do {
        a = oracle::random_int_matrix(rng, n, -5, 5);
      } while (!lu_factor(a) || !lu_factor(oracle::abs_matrix(a)));
      FuzzyVector v;
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back(triangular_to_parametric({center(rng), spread(rng), spread(rng)}));
      }
      const FSLEProblem p{a, oracle::apply(a, v)};
      const CountedSolve f = counted_solve(p, Method::Friedman);
      const CountedSolve e = counted_solve(p, Method::Ezzati);
      const CountedSolve d = counted_solve(p, Method::Embedding);
      if (d.report.status != Status::Strong) ++unsolved;
      ++trials;
      if (d.multiplications <= e.multiplications && e.multiplications <= f.multiplications) {
        ++ordered;
        ++n_ordered;
      }
    }
    per_n += (per_n.empty() ? "" : ", ") + ("n=" + std::to_string(n) + ": " +
                                            std::to_string(n_ordered) + "/100");
  }
  const double share = static_cast<double>(ordered) / trials;
  return {share >= 0.95 && unsolved == 0,
          fmt("%.1f", 100 * share) + "% ordered (" + per_n + "), " + std::to_string(unsolved) +
              " not Strong"};
}

Outcome plot_apex() {
  const fs::path dir = fs::temp_directory_path() / "fsle_acceptance_plots";
  struct Case {
    std::string file;
    std::vector<double> apex;
  };
  const Case cases[] = {{"example1.yaml", {2.0, 1.0}}, {"example3.yaml", {3.0, 1.0}}};
  double worst = 0;
  bool ok = true;
  for (const Case& c : cases) {
    const fs::path out = dir / c.file;
    fs::remove_all(out);
    cli::RunConfig cfg;
    cfg.output_dir = out;
    std::ostringstream sink;
    const auto problem = cli::load_problem(fs::path(FSLE_TEST_DATA) / c.file);
    if (cli::cmd_plot(problem, cfg, sink, sink) != 0) {
      ok = false;
      continue;
    }
    for (std::size_t i = 0; i < c.apex.size(); ++i) {
      const auto path = out / ("component_" + std::to_string(i + 1) + ".svg");
      const auto a = svg_probe::apex(svg_probe::read_file(path.string()));
      if (!a.ok) {
        ok = false;
        continue;
      }
      for (double x : {a.core_lower, a.core_upper, a.polyline_min, a.polyline_max}) {
        worst = std::max(worst, std::abs(x - c.apex[i]));
      }
    }
  }
  return {ok && worst <= 1e-9,
          "apexes (2,1) and (3,1) from metadata and polyline, max error " + fmt("%.3g", worst)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Example 1 golden (all methods, 1e-12, < 1 ms)", example1_golden},
      {"Example 2 golden (rejected, d' = (7,-1,-4))", example2_golden},
      {"Example 3 golden (d, g, v at 1e-12)", example3_golden},
      {"operation-count identities, n = 2..64, two models", formula_identities},
      {"oracle equivalence on 500 random systems", oracle_equivalence},
      {"residual of every Strong report <= 1e-9", residuals},
      {"block inverse on the random corpus", block_inverse_property},
      {"measured cost ordering embedding <= ezzati <= friedman", measured_ordering},
      {"membership plot apexes", plot_apex},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed;
}
