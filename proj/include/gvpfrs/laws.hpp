#pragma once

// Randomized, premise-guarded checks of the algebraic laws satisfied by the
// approximation operators and the residual connectives.
//
// Every law runs a number of trials. A trial draws a connective
// configuration from the pool, builds an instance that satisfies the law's
// structural premises where it can (reflexive-ization, O-transitive closure,
// nested preorders), and evaluates the statement. Trials whose connectives
// lack a required property (exchange principle, identity, duality) are
// counted as premise-violating, never as failures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gvpfrs/connectives.hpp"
#include "gvpfrs/engine.hpp"
#include "gvpfrs/fuzzy.hpp"
#include "json.hpp"

namespace gvpfrs {

/// Properties of a connective configuration, certified once by sampling.
struct ConnectiveTraits {
  bool o_exchange = false;
  bool g_exchange = false;
  bool o_identity = false;
  bool g_identity = false;
  /// O(1,x) >= x and G(0,x) <= x.
  bool unit_dominates = false;
  bool dual = false;
  bool involutive = false;

  nlohmann::json to_json() const;
};

struct LawConfig {
  std::string label;
  Model model;
  ConnectiveTraits traits;

  /// Certifies the traits with check_axioms / are_dual / is_involutive.
  static LawConfig make(std::string label, Model model);
};

/// product/probabilistic_sum, minimum/maximum, O_p(2)/G_p(2), O_DB with its
/// dual, and the non-dual product/maximum; all under the standard negation.
std::vector<LawConfig> default_law_pool();

/// Reads {"configs": [{"label": ..., "overlap": {...}, "grouping": {...},
/// "negation": {...}}, ...]}. Negation defaults to standard.
std::vector<LawConfig> law_pool_from_json(const nlohmann::json& j);

struct LawInfo {
  std::string id;
  std::string statement;
  std::string premises;
  /// Needs the brute-force oracle (universe capped at 10).
  bool uses_oracle = false;
};

const std::vector<LawInfo>& law_catalogue();
/// Throws RegistryError naming the closest known id.
const LawInfo& find_law(const std::string& id);

enum class LawStatus { pass, fail, inconclusive };
std::string_view to_string(LawStatus s);

struct LawReport {
  std::string id;
  std::string statement;
  LawStatus status = LawStatus::inconclusive;
  int trials = 0;
  int premise_satisfied = 0;
  int premise_violated = 0;
  int passes = 0;
  int failures = 0;
  double max_violation = 0.0;
  /// First failing instances, in trial order (at most three).
  std::vector<nlohmann::json> counterexamples;

  nlohmann::json to_json() const;
};

struct LawRunOptions {
  /// Empty means every law.
  std::vector<std::string> ids;
  int trials = 200;
  std::uint64_t seed = 42;
  std::size_t max_universe = 8;
  double tolerance = 1e-9;
  /// Empty means default_law_pool().
  std::vector<LawConfig> pool;
};

/// Trials run in parallel; each trial's generator depends only on (seed,
/// law id, trial index), so the reports are identical for any thread count.
std::vector<LawReport> run_laws(const LawRunOptions& options);

// Fixed-instance diagnostics ------------------------------------------------------

enum class Order { lower_below_upper, upper_below_lower, equal, incomparable };
std::string_view to_string(Order o);

struct ComparabilityReport {
  FuzzySet lower;
  FuzzySet upper;
  bool lower_below_a = false;
  bool a_below_upper = false;
  /// The comparable property: lower(A) within upper(A).
  bool comparable = false;
  Order order = Order::incomparable;

  nlohmann::json to_json() const;
};

ComparabilityReport check_comparability(const FuzzyRelation& r, const Model& model, const FuzzySet& a, double beta,
                                        double slack = 1e-12);

/// The non-associative O_DB example: the four vectors and whether the two
/// containments O(alpha, lower(A)) >= lower(O(alpha, A)) and
/// lower(I_O(alpha, A)) >= I_O(alpha, lower(A)) are strict.
struct NonAssociativeReport {
  FuzzySet lower_a;
  FuzzySet lower_of_overlap;
  FuzzySet overlap_of_lower;
  FuzzySet residual_of_lower;
  FuzzySet lower_of_residual;
  bool overlap_containment_strict = false;
  bool residual_containment_strict = false;

  nlohmann::json to_json() const;
};

NonAssociativeReport non_associative_counterexample();

}  // namespace gvpfrs
