#pragma once

// Problem files: the JSON interchange format of the command-line tool.
//
//   {"universe": ["x1", ...],
//    "relation": [[...], ...],
//    "set": [...]                      or  "sets": {"A": [...], "B": [...]},
//    "beta": 0.5,
//    "connectives": {"overlap": {...}, "grouping": {...}, "negation": {...}},
//    "options": {"tolerance": 1e-9, "oracle_cap": 16}}
//
// Only "universe" and "relation" are always required. The grouping defaults
// to the N-dual of the overlap and the negation to the standard one.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "gvpfrs/connectives.hpp"
#include "gvpfrs/engine.hpp"
#include "gvpfrs/fuzzy.hpp"
#include "json.hpp"

namespace gvpfrs {

struct ProblemOptions {
  double tolerance = 1e-9;
  std::size_t oracle_cap = default_oracle_cap;
};

struct Problem {
  Universe universe;
  FuzzyRelation relation;
  /// "A" when the file uses the single "set" key.
  std::map<std::string, FuzzySet> sets;
  std::optional<double> beta;
  std::optional<Connective> overlap;
  std::optional<Connective> grouping;
  Connective negation = standard_negation();
  ProblemOptions options;

  /// Throws ValidationError when the file lacks sets, beta or an overlap.
  void require_approximation_inputs() const;
  /// Overlap and grouping wrapped with their residuals.
  Model model() const;
};

/// Throws ValidationError naming the offending key or entry.
Problem parse_problem(const nlohmann::json& j);
/// Reads and parses a file. Malformed JSON is reported with its line and
/// column as a ValidationError.
Problem load_problem(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

enum class Side { lower, upper, both };
Side side_from_string(const std::string& s);

/// {"lower", "upper", "g", "h", "witnesses", "witnesses_upper", "method"}
/// restricted to the requested side; witnesses map anchor labels to labels.
nlohmann::json result_to_json(const ApproximationResult& res, const Universe& universe, Side side);

/// Largest pointwise difference between two results on the requested side
/// (approximations and levels).
double max_discrepancy(const ApproximationResult& a, const ApproximationResult& b, Side side);

/// Relation report with witnesses given as labels.
nlohmann::json relation_report_to_json(const RelationReport& rep, const Universe& universe,
                                       const std::string& overlap_name);

}  // namespace gvpfrs
