#pragma once

// Inner loops of the approximation operators. Every kernel exists twice: a
// plain serial reference and an OpenMP version parallel over anchors (rows).
// Each anchor's work is independent and written to its own slot, so the two
// agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "gvpfrs/connectives.hpp"
#include "gvpfrs/fuzzy.hpp"

namespace gvpfrs::kernels {

enum class Rank { largest, smallest };

struct SelectionInput {
  const FuzzyRelation& relation;
  /// I_O for the lower side, I^G for the upper side.
  const ResidualPair& residual;
  /// When set, the relation entry is negated before scoring (R^N).
  const Connective* negation = nullptr;
  std::span<const double> set;
  std::size_t k = 1;
  Rank rank = Rank::largest;
};

/// out[x] = k-th largest (or smallest) of score(x,y) = residual(R(x,y), A(y)).
/// When `witnesses` is non-null it receives, per anchor, the k best-ranked
/// indices (ties to the smaller index), sorted ascending.
void select_serial(const SelectionInput& in, std::span<double> out, std::vector<std::vector<std::size_t>>* witnesses);
void select_parallel(const SelectionInput& in, std::span<double> out,
                     std::vector<std::vector<std::size_t>>* witnesses);

/// out[z] = max_x O(R(x,z), level[x]).
void sup_compose_serial(const FuzzyRelation& r, const Connective& overlap, std::span<const double> level,
                        std::span<double> out);
void sup_compose_parallel(const FuzzyRelation& r, const Connective& overlap, std::span<const double> level,
                          std::span<double> out);

/// out[z] = min_x G(N(R(x,z)), level[x]).
void inf_compose_serial(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                        std::span<const double> level, std::span<double> out);
void inf_compose_parallel(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                          std::span<const double> level, std::span<double> out);

/// out(x,z) = max(R(x,z), max_y O(R(x,y), R(y,z))). Returns the largest change.
double closure_step_serial(const FuzzyRelation& r, const Connective& overlap, FuzzyRelation& out);
double closure_step_parallel(const FuzzyRelation& r, const Connective& overlap, FuzzyRelation& out);

// Single-anchor pieces shared by both families.
namespace detail {

void score_row(const SelectionInput& in, std::size_t x, std::vector<double>& scores);
double select_row(const SelectionInput& in, const std::vector<double>& scores, std::vector<std::size_t>& order,
                  std::vector<std::size_t>* witness);
double sup_column(const FuzzyRelation& r, const Connective& overlap, std::span<const double> level, std::size_t z);
double inf_column(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                  std::span<const double> level, std::size_t z);
double closure_row(const FuzzyRelation& r, const Connective& overlap, FuzzyRelation& out, std::size_t x);

}  // namespace detail

}  // namespace gvpfrs::kernels
