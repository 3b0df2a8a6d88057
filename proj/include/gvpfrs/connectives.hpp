#pragma once

// Overlap functions, grouping functions, fuzzy negations and their residual
// operators.
//
// An overlap O is a commutative, non-decreasing, continuous map [0,1]^2 -> [0,1]
// with O(x,y) = 0 iff xy = 0 and O(x,y) = 1 iff xy = 1. A grouping G is the
// order dual: G(x,y) = 0 iff x = y = 0 and G(x,y) = 1 iff x = 1 or y = 1.
// Neither needs to be associative; when one is, it is a positive continuous
// t-norm (t-conorm) and has 1 (0) as identity.
//
// The residual implication of an overlap is
//     I_O(x,y) = max{ z : O(x,z) <= y }
// and the residual co-implication of a grouping is
//     I^G(x,y) = min{ z : y <= G(x,z) }.
// Built-ins register closed forms; anything else is inverted by bisection,
// which is sound because O(x,.) and G(x,.) are continuous and non-decreasing.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gvpfrs {

enum class ConnectiveKind { overlap, grouping, negation };

std::string_view to_string(ConnectiveKind kind);

using Params = std::map<std::string, double>;

namespace detail {
class ConnectiveImpl;
}

/// Immutable, cheaply copyable handle to a named connective.
///
/// The call operators do not validate their arguments; use eval() at API
/// boundaries. Binary connectives reject the unary call and vice versa.
class Connective {
 public:
  explicit Connective(std::shared_ptr<const detail::ConnectiveImpl> impl);

  ConnectiveKind kind() const;
  const std::string& name() const;
  const Params& params() const;
  bool has_closed_residual() const;

  double operator()(double x, double y) const;
  double operator()(double x) const;

  /// Closed-form residual (I_O for an overlap, I^G for a grouping), if one is
  /// registered.
  std::optional<double> closed_residual(double x, double y) const;

  nlohmann::json to_json() const;

 private:
  std::shared_ptr<const detail::ConnectiveImpl> impl_;
};

// Built-in overlaps.
Connective minimum();
Connective product();
/// O_p(x,y) = x^p y^p, p > 0 and p != 1.
Connective overlap_power(double p);
/// O_DB(x,y) = 2xy/(x+y), 0 at the origin.
Connective overlap_db();

// Built-in groupings.
Connective maximum();
Connective probabilistic_sum();
/// G_p(x,y) = 1 - (1-x)^p (1-y)^p, p > 1.
Connective grouping_power(double p);

// Negations.
Connective standard_negation();
/// N(x) = (1-x)/(1+lambda x), lambda > -1. Involutive.
Connective sugeno_negation(double lambda);
/// N(x) = 1 - x^p, p > 0. Involutive only for p = 1.
Connective power_negation(double p);

/// Overlap or grouping tabulated on a uniform m x m grid over [0,1]^2 and
/// bilinearly interpolated. grid[i][j] is the value at (i/(m-1), j/(m-1)).
/// Residuals always go through bisection.
Connective tabulated(ConnectiveKind kind, std::vector<std::vector<double>> grid);

/// Wraps an arbitrary function as a connective of the given kind. Nothing is
/// verified here; run check_axioms() on the result.
Connective custom(ConnectiveKind kind, std::string name, std::function<double(double, double)> fn);
Connective custom_negation(std::string name, std::function<double(double)> fn);

/// N-dual of an overlap (a grouping) or of a grouping (an overlap):
/// G(x,y) = N(O(N(x),N(y))). Under the standard negation the built-in De
/// Morgan pairs are returned by name (product -> probabilistic_sum, ...).
/// Throws PremiseError when N is not involutive.
Connective dual_of(const Connective& desc, const Connective& negation);

/// Registry lookup by the names used in problem files. Throws RegistryError
/// for unknown names and DomainError for invalid parameters.
Connective make_connective(std::string_view name, const Params& params = {});

/// Parses {"name": ..., "p": ...}. When `expected` is set the descriptor must
/// have that kind (and "tabulated" descriptors take it as their kind).
Connective connective_from_json(const nlohmann::json& j,
                                std::optional<ConnectiveKind> expected = std::nullopt);

std::vector<std::string> registered_connective_names();

/// Checked evaluation: arguments must lie in [0,1].
double eval(const Connective& desc, double x, double y);
double eval(const Connective& negation, double x);

enum class ResidualMode { closed_form, bisection };

/// A connective together with the way its residual is evaluated.
class ResidualPair {
 public:
  static constexpr double default_tolerance = 1e-12;
  static constexpr int default_max_iterations = 80;

  /// Uses the closed form when registered, bisection otherwise.
  explicit ResidualPair(Connective base, double tolerance = default_tolerance);
  /// Forces a mode; closed_form on a connective without one throws PremiseError.
  ResidualPair(Connective base, ResidualMode mode, double tolerance = default_tolerance,
               int max_iterations = default_max_iterations);

  const Connective& base() const { return base_; }
  ResidualMode mode() const { return mode_; }
  double tolerance() const { return tolerance_; }

  /// The residual, unchecked: I_O for an overlap base, I^G for a grouping.
  double operator()(double x, double y) const;

 private:
  double bisect_implication(double x, double y) const;
  double bisect_coimplication(double x, double y) const;

  Connective base_;
  ResidualMode mode_;
  double tolerance_;
  int max_iterations_;
};

/// I_O(x,y); the pair must wrap an overlap.
double residual_implication(const ResidualPair& pair, double x, double y);
/// I^G(x,y); the pair must wrap a grouping.
double residual_coimplication(const ResidualPair& pair, double x, double y);

/// (G,N)-implication I_{G,N}(a,b) = G(N(a), b).
double gn_implication(const Connective& grouping, const Connective& negation, double a, double b);

/// Sampled check of N(N(x)) = x on a uniform grid.
bool is_involutive(const Connective& negation, int samples = 1001, double tolerance = 1e-9);

/// Sampled check of G(x,y) = N(O(N(x),N(y))) on a grid.
bool are_dual(const Connective& overlap, const Connective& grouping, const Connective& negation,
              int grid_density = 41, double tolerance = 1e-9);

struct AxiomOptions {
  int grid_density = 21;
  int random_samples = 1000;
  std::uint64_t seed = 0;
  /// Slack for the equational axioms (symmetry, exchange) and monotonicity.
  double tolerance = 1e-9;
  /// Continuity proxy: zooming into the steepest grid cells, the oscillation
  /// must fall below this fraction of its coarse value (or below `tolerance`).
  double oscillation_shrink = 0.5;
  int zoom_steps = 30;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  /// Offending point (pair, triple, or single argument) when failed.
  std::vector<double> counterexample;
  double magnitude = 0.0;
};

/// Sampled certificate for a connective. Continuity and associativity
/// cannot be decided by sampling; a pass here is evidence, not proof.
struct AxiomReport {
  std::string subject;
  ConnectiveKind kind{};
  std::vector<AxiomCheck> checks;
  /// O(1,x) = x (overlap), G(0,x) = x (grouping).
  bool has_identity = false;
  /// O(1,x) >= x (overlap), G(0,x) <= x (grouping).
  bool unit_dominates = false;
  /// Negations only.
  bool involutive = false;

  const AxiomCheck* find(std::string_view axiom) const;
  bool passed(std::string_view axiom) const;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Axioms checked for binary connectives: "range", "symmetry",
/// "zero_boundary", "one_boundary", "monotone", "continuity", "exchange".
/// For negations: "range", "boundary", "strictly_decreasing", "continuity".
AxiomReport check_axioms(const Connective& desc, const AxiomOptions& options = {});

}  // namespace gvpfrs
