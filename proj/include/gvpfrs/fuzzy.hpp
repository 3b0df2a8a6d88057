#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gvpfrs/connectives.hpp"
#include "gvpfrs/execution.hpp"

namespace gvpfrs {

/// Ordered list of distinct element labels.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);
  /// Labels x1..xn.
  static Universe indexed(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws LookupError for unknown labels.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Membership vector over a finite universe, aligned with its label order.
/// Every entry lies in [0,1] (enforced on construction).
class FuzzySet {
 public:
  FuzzySet() = default;
  explicit FuzzySet(std::vector<double> memberships);

  std::size_t size() const { return m_.size(); }
  double operator[](std::size_t i) const { return m_[i]; }
  std::span<const double> values() const { return m_; }
  bool is_crisp() const;

  /// Unchecked write; callers keep values inside [0,1].
  void set(std::size_t i, double v) { m_[i] = v; }

 private:
  std::vector<double> m_;
};

/// Square membership matrix, row-major: R(x,y) at x*n + y.
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  FuzzyRelation(std::size_t n, std::vector<double> row_major);
  explicit FuzzyRelation(const std::vector<std::vector<double>>& rows);
  static FuzzyRelation identity(std::size_t n);

  std::size_t size() const { return n_; }
  double operator()(std::size_t x, std::size_t y) const { return m_[x * n_ + y]; }
  std::span<const double> row(std::size_t x) const { return {m_.data() + x * n_, n_}; }
  std::span<const double> values() const { return m_; }
  bool is_crisp() const;

  void set(std::size_t x, std::size_t y, double v) { m_[x * n_ + y] = v; }

  std::vector<std::vector<double>> rows() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> m_;
};

// Constructors and pointwise operations --------------------------------------

/// alpha_X.
FuzzySet make_constant(std::size_t n, double alpha);
FuzzySet make_constant(const Universe& universe, double alpha);
/// Fuzzy point y_alpha: alpha at y, 0 elsewhere.
FuzzySet make_point(std::size_t n, std::size_t y, double alpha);
FuzzySet make_point(const Universe& universe, const std::string& y, double alpha);
/// A^N(x) = N(A(x)).
FuzzySet complement(const FuzzySet& a, const Connective& negation);
FuzzySet intersection(const FuzzySet& a, const FuzzySet& b);
FuzzySet set_union(const FuzzySet& a, const FuzzySet& b);
/// x -> C(alpha, A(x)) for a binary connective C.
FuzzySet pointwise(const Connective& c, double alpha, const FuzzySet& a);
/// x -> residual(alpha, A(x)).
FuzzySet pointwise(const ResidualPair& r, double alpha, const FuzzySet& a);
/// R^{-1}(x,y) = R(y,x).
FuzzyRelation inverse(const FuzzyRelation& r);
/// R^N(x,y) = N(R(x,y)).
FuzzyRelation complement(const FuzzyRelation& r, const Connective& negation);

/// A <= B pointwise with absolute slack.
bool is_subset(const FuzzySet& a, const FuzzySet& b, double slack = 1e-12);
/// max_x (A(x) - B(x)), clipped at 0: how far A is from being inside B.
double subset_violation(const FuzzySet& a, const FuzzySet& b);
double max_abs_difference(const FuzzySet& a, const FuzzySet& b);

// Relation properties ---------------------------------------------------------

struct RelationCheckOptions {
  double epsilon = 1e-9;
  /// Compare O(R(x,y),R(y,z)) <= R(x,z) without slack.
  bool exact = false;
};

struct RelationReport {
  bool serial = false;
  bool reflexive = false;
  bool symmetric = false;
  bool o_transitive = false;
  bool preorder = false;
  bool similarity = false;
  /// Row x with max_y R(x,y) < 1.
  std::optional<std::size_t> serial_witness;
  std::optional<std::size_t> reflexive_witness;
  /// (x,y) with R(x,y) != R(y,x).
  std::optional<std::pair<std::size_t, std::size_t>> symmetric_witness;
  /// (x,y,z) with the largest O(R(x,y),R(y,z)) - R(x,z).
  std::optional<std::array<std::size_t, 3>> transitive_witness;
  double transitive_violation = 0.0;
};

/// Decides seriality, reflexivity, symmetry and O-transitivity by exhaustive
/// enumeration (|X|^3 triples for transitivity).
RelationReport check_relation(const FuzzyRelation& r, const Connective& overlap,
                              const RelationCheckOptions& options = {});

/// Crisp (wedge) transitivity: R(x,y)=1 and R(y,z)=1 imply R(x,z)=1.
bool is_crisp_transitive(const FuzzyRelation& r);

// Granules --------------------------------------------------------------------

enum class GranuleSide { overlap, grouping };

struct Granule {
  std::size_t anchor = 0;
  double level = 0.0;
  GranuleSide side = GranuleSide::overlap;
  FuzzySet values;
};

/// [x_lambda]^O_R(y) = O(R(x,y), lambda).
Granule o_granule(const FuzzyRelation& r, const Connective& overlap, std::size_t x, double lambda);
/// [x_lambda]^G_R(y) = G(N(R(x,y)), lambda). N must be involutive.
Granule g_granule(const FuzzyRelation& r, const Connective& grouping, const Connective& negation, std::size_t x,
                  double lambda);

// Closure ---------------------------------------------------------------------

struct ClosureOptions {
  /// Stop once no entry moves by more than this.
  double delta = 1e-15;
  int max_rounds = 256;
};

/// Smallest O-transitive relation containing R: iterates
/// R(x,z) <- R(x,z) v max_y O(R(x,y), R(y,z)) to a fixpoint. Rows are
/// composed in parallel.
FuzzyRelation o_transitive_closure(const FuzzyRelation& r, const Connective& overlap,
                                   const ClosureOptions& options = {}, Execution exec = Execution::parallel);

}  // namespace gvpfrs
