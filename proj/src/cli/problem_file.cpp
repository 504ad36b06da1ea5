// Copyright 2026 The fsle Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fsle/cli/problem_file.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fsle::cli {

namespace {

int line_of(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.is_null() ? 0 : mark.line + 1;
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& msg) {
  throw ProblemFileError(line_of(node), field, msg);
}

double read_number(const YAML::Node& node, const std::string& field) {
  if (!node || !node.IsScalar()) {
    fail(node, field, "expected a number");
  }
  double value = 0.0;
  try {
    value = node.as<double>();
  } catch (const YAML::Exception&) {
    fail(node, field, "'" + node.Scalar() + "' is not a number");
  }
  if (!std::isfinite(value)) {
    fail(node, field, "number must be finite");
  }
  return value;
}

std::vector<double> read_numbers(const YAML::Node& node, const std::string& field) {
  if (!node || !node.IsSequence()) {
    fail(node, field, "expected a list of numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(read_number(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

YAML::Node require(const YAML::Node& parent, const char* key, const std::string& field) {
  YAML::Node child = parent[key];
  if (!child) {
    fail(parent, field, "missing field");
  }
  return child;
}

RhsRecord read_record(const YAML::Node& node, const std::string& field) {
  if (!node.IsMap()) {
    fail(node, field, "expected a mapping with a 'kind' field");
  }
  const YAML::Node kind_node = require(node, "kind", field + ".kind");
  const std::string kind = kind_node.as<std::string>();
  if (kind == "triangular") {
    TriangularRecord t{read_number(require(node, "c", field + ".c"), field + ".c"),
                       read_number(require(node, "mu", field + ".mu"), field + ".mu"),
                       read_number(require(node, "rho", field + ".rho"), field + ".rho")};
    if (t.mu < 0.0) fail(node["mu"], field + ".mu", "spread must be nonnegative");
    if (t.rho < 0.0) fail(node["rho"], field + ".rho", "spread must be nonnegative");
    return t;
  }
  if (kind == "affine") {
    AffineRecord a;
    for (const char* key : {"lower", "upper"}) {
      const std::string f = field + "." + key;
      const YAML::Node child = require(node, key, f);
      const auto coeffs = read_numbers(child, f);
      if (coeffs.size() != 2) {
        fail(child, f, "expected [constant, slope]");
      }
      (std::string_view(key) == "lower" ? a.lower : a.upper) = {coeffs[0], coeffs[1]};
    }
    return a;
  }
  if (kind == "sampled") {
    SampledRecord s;
    const YAML::Node grid = require(node, "grid", field + ".grid");
    s.grid = read_numbers(grid, field + ".grid");
    s.lower = read_numbers(require(node, "lower", field + ".lower"), field + ".lower");
    s.upper = read_numbers(require(node, "upper", field + ".upper"), field + ".upper");
    try {
      check_grid(s.grid);
    } catch (const std::invalid_argument& e) {
      fail(grid, field + ".grid", e.what());
    }
    if (s.lower.size() != s.grid.size() || s.upper.size() != s.grid.size()) {
      fail(node, field, "lower and upper need one value per grid point");
    }
    return s;
  }
  fail(kind_node, field + ".kind",
       "unknown kind '" + kind + "' (expected triangular, affine or sampled)");
}

// Shortest representation that reads back to the same double.
std::string exact(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

void emit_numbers(YAML::Emitter& out, const auto& values) {
  out << YAML::Flow << YAML::BeginSeq;
  for (double v : values) out << exact(v);
  out << YAML::EndSeq;
}

}  // namespace

ProblemFileError::ProblemFileError(int line, std::string field, const std::string& message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? std::string() : "field '" + field + "': ") + message),
      line_(line),
      field_(std::move(field)) {}

ProblemFile parse_problem(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ProblemFileError(e.mark.line + 1, "", e.msg);
  }
  if (!root || root.IsNull()) {
    throw ProblemFileError(0, "", "empty problem file");
  }
  if (!root.IsMap()) {
    fail(root, "", "expected a mapping with fields n, matrix, rhs");
  }

  ProblemFile file;
  const YAML::Node n_node = require(root, "n", "n");
  long long n = 0;
  try {
    n = n_node.as<long long>();
  } catch (const YAML::Exception&) {
    fail(n_node, "n", "expected a positive integer");
  }
  if (n <= 0) {
    fail(n_node, "n", "expected a positive integer");
  }
  file.n = static_cast<std::size_t>(n);

  const YAML::Node matrix = require(root, "matrix", "matrix");
  if (!matrix.IsSequence() || matrix.size() != file.n) {
    fail(matrix, "matrix", "expected " + std::to_string(n) + " rows");
  }
  file.matrix = CrispMatrix(file.n, file.n);
  for (std::size_t i = 0; i < file.n; ++i) {
    const std::string field = "matrix[" + std::to_string(i) + "]";
    const auto row = read_numbers(matrix[i], field);
    if (row.size() != file.n) {
      fail(matrix[i], field, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < file.n; ++j) file.matrix(i, j) = row[j];
  }

  const YAML::Node rhs = require(root, "rhs", "rhs");
  if (!rhs.IsSequence() || rhs.size() != file.n) {
    fail(rhs, "rhs", "expected " + std::to_string(n) + " fuzzy numbers");
  }
  for (std::size_t i = 0; i < file.n; ++i) {
    file.rhs.push_back(read_record(rhs[i], "rhs[" + std::to_string(i) + "]"));
  }
  return file;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ProblemFileError(0, "", "cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str());
}

std::string serialize_problem(const ProblemFile& file) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "n" << YAML::Value << file.n;
  out << YAML::Key << "matrix" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < file.matrix.rows(); ++i) {
    emit_numbers(out, file.matrix.row(i));
  }
  out << YAML::EndSeq;
  out << YAML::Key << "rhs" << YAML::Value << YAML::BeginSeq;
  for (const auto& record : file.rhs) {
    out << YAML::Flow << YAML::BeginMap;
    if (const auto* t = std::get_if<TriangularRecord>(&record)) {
      out << YAML::Key << "kind" << YAML::Value << "triangular";
      out << YAML::Key << "c" << YAML::Value << exact(t->c);
      out << YAML::Key << "mu" << YAML::Value << exact(t->mu);
      out << YAML::Key << "rho" << YAML::Value << exact(t->rho);
    } else if (const auto* a = std::get_if<AffineRecord>(&record)) {
      out << YAML::Key << "kind" << YAML::Value << "affine";
      out << YAML::Key << "lower" << YAML::Value;
      emit_numbers(out, a->lower);
      out << YAML::Key << "upper" << YAML::Value;
      emit_numbers(out, a->upper);
    } else {
      const auto& s = std::get<SampledRecord>(record);
      out << YAML::Key << "kind" << YAML::Value << "sampled";
      out << YAML::Key << "grid" << YAML::Value;
      emit_numbers(out, s.grid);
      out << YAML::Key << "lower" << YAML::Value;
      emit_numbers(out, s.lower);
      out << YAML::Key << "upper" << YAML::Value;
      emit_numbers(out, s.upper);
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

FuzzyNumber to_fuzzy(const RhsRecord& record) {
  if (const auto* t = std::get_if<TriangularRecord>(&record)) {
    return triangular_to_parametric({t->c, t->mu, t->rho});
  }
  if (const auto* a = std::get_if<AffineRecord>(&record)) {
    return {AffineZ{a->lower[0], a->lower[1]}, AffineZ{a->upper[0], a->upper[1]}};
  }
  const auto& s = std::get<SampledRecord>(record);
  return {SampledZ(s.grid, s.lower), SampledZ(s.grid, s.upper)};
}

FSLEProblem to_problem(const ProblemFile& file) {
  FuzzyVector w;
  for (const auto& record : file.rhs) w.push_back(to_fuzzy(record));
  try {
    return FSLEProblem(file.matrix, std::move(w));
  } catch (const std::invalid_argument& e) {
    throw ProblemFileError(0, "", e.what());
  }
}

}  // namespace fsle::cli
