#pragma once

// (O,G)-granular variable precision approximations.
//
// For a relation R, an overlap O with residual I_O, a grouping G with
// residual I^G, an involutive negation N and a precision beta, with
// k = ceil(beta |X|) clamped to [1,|X|]:
//
//   g_A(x)   = k-th largest  of  I_O(R(x,y), A(y))        over y
//   h_A(x)   = k-th smallest of  I^G(N(R(x,y)), A(y))     over y
//   lower(z) = max_x O(R(x,z), g_A(x))
//   upper(z) = min_x G(N(R(x,z)), h_A(x))
//
// The brute-force routines evaluate the definition instead (best granule
// level over every subset of size >= k) and serve as the reference.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gvpfrs/connectives.hpp"
#include "gvpfrs/execution.hpp"
#include "gvpfrs/fuzzy.hpp"

namespace gvpfrs {

/// The family of subsets with at least beta|X| elements, represented by its
/// minimum cardinality k.
struct PrecisionFamily {
  double beta = 1.0;
  std::size_t n = 0;
  std::size_t k = 0;

  /// beta in [0,1], n >= 1. The ceiling is taken after a 1e-12 downward nudge.
  static PrecisionFamily make(double beta, std::size_t n);
  bool contains(std::size_t cardinality) const { return cardinality >= k; }
};

std::size_t precision_threshold(double beta, std::size_t n);

enum class Method { selection, bruteforce };
std::string_view to_string(Method m);

/// Per-anchor element subsets, ascending.
using Witnesses = std::vector<std::vector<std::size_t>>;

struct ApproximationResult {
  FuzzySet lower;
  FuzzySet upper;
  FuzzySet g;
  FuzzySet h;
  Witnesses witnesses_lower;
  Witnesses witnesses_upper;
  Method method = Method::selection;
};

/// Connectives of one problem. `overlap` and `grouping` carry their residuals.
struct Model {
  ResidualPair overlap;
  ResidualPair grouping;
  Connective negation;
};

inline constexpr std::size_t default_oracle_cap = 16;
inline constexpr std::size_t max_oracle_cap = 20;

FuzzySet g_vector(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                  Witnesses* witnesses = nullptr, Execution exec = Execution::parallel);
FuzzySet h_vector(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                  const FuzzySet& a, double beta, Witnesses* witnesses = nullptr,
                  Execution exec = Execution::parallel);

/// g restricted to one subset: x -> min_{y in subset} I_O(R(x,y), A(y)).
FuzzySet g_on_subset(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a,
                     const std::vector<std::size_t>& subset);
/// h restricted to one subset: x -> max_{y in subset} I^G(N(R(x,y)), A(y)).
FuzzySet h_on_subset(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                     const FuzzySet& a, const std::vector<std::size_t>& subset);

/// Union of the O-granules [x_{level(x)}]: z -> max_x O(R(x,z), level(x)).
FuzzySet granule_union(const FuzzyRelation& r, const Connective& overlap, const FuzzySet& level,
                       Execution exec = Execution::parallel);
/// Intersection of the G-granules: z -> min_x G(N(R(x,z)), level(x)).
FuzzySet granule_intersection(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                              const FuzzySet& level, Execution exec = Execution::parallel);

/// Lower approximation; fills lower, g and witnesses_lower of the result.
ApproximationResult lower_approx(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                                 Execution exec = Execution::parallel);
/// Upper approximation; fills upper, h and witnesses_upper. N must be involutive.
ApproximationResult upper_approx(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                                 const FuzzySet& a, double beta, Execution exec = Execution::parallel);
/// Both sides.
ApproximationResult approximate(const FuzzyRelation& r, const Model& model, const FuzzySet& a, double beta,
                                Execution exec = Execution::parallel);

/// Shorthands returning only the approximation.
FuzzySet lower(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
               Execution exec = Execution::parallel);
FuzzySet upper(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation, const FuzzySet& a,
               double beta, Execution exec = Execution::parallel);

/// Definition-level levels: for each anchor, the best min-score over all
/// subsets of cardinality >= k (enumerated). Refuses |X| > cap.
FuzzySet bruteforce_g(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                      std::size_t cap = default_oracle_cap);
FuzzySet bruteforce_h(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                      const FuzzySet& a, double beta, std::size_t cap = default_oracle_cap);
FuzzySet bruteforce_lower(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                          std::size_t cap = default_oracle_cap);
FuzzySet bruteforce_upper(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                          const FuzzySet& a, double beta, std::size_t cap = default_oracle_cap);
ApproximationResult bruteforce_approximate(const FuzzyRelation& r, const Model& model, const FuzzySet& a, double beta,
                                           std::size_t cap = default_oracle_cap);

/// N(lower(A^N)). Throws PremiseError unless `grouping` is the N-dual of the
/// overlap and N is involutive.
FuzzySet upper_via_duality(const FuzzyRelation& r, const ResidualPair& overlap, const Connective& grouping,
                           const Connective& negation, const FuzzySet& a, double beta,
                           Execution exec = Execution::parallel);

/// True when every anchor's witness set has at least k elements and the
/// granule at g_A(x) stays below A on it (up to `slack`).
bool witnesses_valid(const FuzzyRelation& r, const Connective& overlap, const FuzzySet& a, const FuzzySet& g,
                     const Witnesses& w, double beta, double slack = 1e-12);

// Crisp degenerations -----------------------------------------------------------
// [x]_R = {y : R(x,y) = 1}. All of these throw DomainError on non-crisp input.

/// Anchors x with |[x]_R intersect A^c| <= (1-beta)|X|.
std::vector<std::size_t> crisp_lower_anchors(const FuzzyRelation& r, const FuzzySet& a, double beta);
/// Anchors x with |[x]_R intersect A| <= (1-beta)|X|.
std::vector<std::size_t> crisp_upper_anchors(const FuzzyRelation& r, const FuzzySet& a, double beta);
/// Union of [x]_R over crisp_lower_anchors.
FuzzySet crisp_lower(const FuzzyRelation& r, const FuzzySet& a, double beta);
/// Intersection of ([x]_R)^c over crisp_upper_anchors.
FuzzySet crisp_upper(const FuzzyRelation& r, const FuzzySet& a, double beta);
/// Indicator of an anchor list.
FuzzySet indicator(std::size_t n, const std::vector<std::size_t>& members);

}  // namespace gvpfrs
