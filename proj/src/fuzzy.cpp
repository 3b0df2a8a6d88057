#include "gvpfrs/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gvpfrs/errors.hpp"
#include "kernels/kernels.hpp"

namespace gvpfrs {

namespace {

void check_unit(double v, const std::string& what) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(what + " = " + std::to_string(v) + " is outside [0,1]");
}

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// Universe --------------------------------------------------------------------

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DomainError("universe must contain at least one element");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw DomainError("duplicate universe label '" + labels_[i] + "'");
  }
}

Universe Universe::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return Universe(std::move(labels));
}

std::size_t Universe::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw LookupError("unknown element '" + label + "'");
  return it->second;
}

// FuzzySet / FuzzyRelation ---------------------------------------------------

FuzzySet::FuzzySet(std::vector<double> memberships) : m_(std::move(memberships)) {
  for (std::size_t i = 0; i < m_.size(); ++i) check_unit(m_[i], "membership[" + std::to_string(i) + "]");
}

bool FuzzySet::is_crisp() const {
  return std::all_of(m_.begin(), m_.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

FuzzyRelation::FuzzyRelation(std::size_t n, std::vector<double> row_major) : n_(n), m_(std::move(row_major)) {
  if (m_.size() != n * n) throw DomainError("relation needs " + std::to_string(n * n) + " entries");
  for (std::size_t i = 0; i < m_.size(); ++i) {
    check_unit(m_[i], "R(" + std::to_string(i / n) + "," + std::to_string(i % n) + ")");
  }
}

FuzzyRelation::FuzzyRelation(const std::vector<std::vector<double>>& rows) : n_(rows.size()) {
  m_.reserve(n_ * n_);
  for (std::size_t x = 0; x < n_; ++x) {
    if (rows[x].size() != n_) throw DomainError("relation row " + std::to_string(x) + " is not of length " +
                                                std::to_string(n_));
    for (std::size_t y = 0; y < n_; ++y) {
      check_unit(rows[x][y], "R(" + std::to_string(x) + "," + std::to_string(y) + ")");
      m_.push_back(rows[x][y]);
    }
  }
}

FuzzyRelation FuzzyRelation::identity(std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return FuzzyRelation(n, std::move(m));
}

bool FuzzyRelation::is_crisp() const {
  return std::all_of(m_.begin(), m_.end(), [](double v) { return v == 0.0 || v == 1.0; });
}

std::vector<std::vector<double>> FuzzyRelation::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (std::size_t x = 0; x < n_; ++x) out[x].assign(m_.begin() + x * n_, m_.begin() + (x + 1) * n_);
  return out;
}

// Pointwise ---------------------------------------------------------------------

FuzzySet make_constant(std::size_t n, double alpha) {
  check_unit(alpha, "alpha");
  return FuzzySet(std::vector<double>(n, alpha));
}

FuzzySet make_constant(const Universe& universe, double alpha) { return make_constant(universe.size(), alpha); }

FuzzySet make_point(std::size_t n, std::size_t y, double alpha) {
  check_unit(alpha, "alpha");
  if (y >= n) throw LookupError("element index " + std::to_string(y) + " out of range");
  std::vector<double> m(n, 0.0);
  m[y] = alpha;
  return FuzzySet(std::move(m));
}

FuzzySet make_point(const Universe& universe, const std::string& y, double alpha) {
  return make_point(universe.size(), universe.index_of(y), alpha);
}

FuzzySet complement(const FuzzySet& a, const Connective& negation) {
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = negation(a[i]);
  return FuzzySet(std::move(m));
}

FuzzySet intersection(const FuzzySet& a, const FuzzySet& b) {
  check_same_size(a.size(), b.size());
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return FuzzySet(std::move(m));
}

FuzzySet set_union(const FuzzySet& a, const FuzzySet& b) {
  check_same_size(a.size(), b.size());
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return FuzzySet(std::move(m));
}

FuzzySet pointwise(const Connective& c, double alpha, const FuzzySet& a) {
  check_unit(alpha, "alpha");
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = c(alpha, a[i]);
  return FuzzySet(std::move(m));
}

FuzzySet pointwise(const ResidualPair& r, double alpha, const FuzzySet& a) {
  check_unit(alpha, "alpha");
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = r(alpha, a[i]);
  return FuzzySet(std::move(m));
}

FuzzyRelation inverse(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<double> m(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m[x * n + y] = r(y, x);
  return FuzzyRelation(n, std::move(m));
}

FuzzyRelation complement(const FuzzyRelation& r, const Connective& negation) {
  std::vector<double> m(r.values().begin(), r.values().end());
  for (double& v : m) v = negation(v);
  return FuzzyRelation(r.size(), std::move(m));
}

bool is_subset(const FuzzySet& a, const FuzzySet& b, double slack) { return subset_violation(a, b) <= slack; }

double subset_violation(const FuzzySet& a, const FuzzySet& b) {
  check_same_size(a.size(), b.size());
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) v = std::max(v, a[i] - b[i]);
  return v;
}

double max_abs_difference(const FuzzySet& a, const FuzzySet& b) {
  check_same_size(a.size(), b.size());
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) v = std::max(v, std::abs(a[i] - b[i]));
  return v;
}

// Relation properties ---------------------------------------------------------

RelationReport check_relation(const FuzzyRelation& r, const Connective& overlap, const RelationCheckOptions& options) {
  if (overlap.kind() != ConnectiveKind::overlap) throw PremiseError("check_relation needs an overlap");
  const std::size_t n = r.size();
  RelationReport rep;

  for (std::size_t x = 0; x < n && !rep.serial_witness; ++x) {
    const auto row = r.row(x);
    if (*std::max_element(row.begin(), row.end()) < 1.0) rep.serial_witness = x;
  }
  for (std::size_t x = 0; x < n && !rep.reflexive_witness; ++x) {
    if (r(x, x) != 1.0) rep.reflexive_witness = x;
  }
  for (std::size_t x = 0; x < n && !rep.symmetric_witness; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (r(x, y) != r(y, x)) {
        rep.symmetric_witness = std::make_pair(x, y);
        break;
      }
    }
  }
  const double slack = options.exact ? 0.0 : options.epsilon;
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double v = overlap(r(x, y), r(y, z)) - r(x, z);
        if (v > worst) {
          worst = v;
          rep.transitive_witness = std::array<std::size_t, 3>{x, y, z};
        }
      }
  rep.transitive_violation = worst;

  rep.serial = !rep.serial_witness;
  rep.reflexive = !rep.reflexive_witness;
  rep.symmetric = !rep.symmetric_witness;
  rep.o_transitive = worst <= slack;
  if (rep.o_transitive) rep.transitive_witness.reset();
  rep.preorder = rep.reflexive && rep.o_transitive;
  rep.similarity = rep.preorder && rep.symmetric;
  return rep;
}

bool is_crisp_transitive(const FuzzyRelation& r) {
  if (!r.is_crisp()) throw DomainError("crisp transitivity needs a crisp relation");
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (r(x, y) != 1.0) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (r(y, z) == 1.0 && r(x, z) != 1.0) return false;
    }
  return true;
}

// Granules ---------------------------------------------------------------------

Granule o_granule(const FuzzyRelation& r, const Connective& overlap, std::size_t x, double lambda) {
  check_unit(lambda, "lambda");
  if (x >= r.size()) throw LookupError("anchor index " + std::to_string(x) + " out of range");
  std::vector<double> m(r.size());
  for (std::size_t y = 0; y < r.size(); ++y) m[y] = overlap(r(x, y), lambda);
  return {x, lambda, GranuleSide::overlap, FuzzySet(std::move(m))};
}

Granule g_granule(const FuzzyRelation& r, const Connective& grouping, const Connective& negation, std::size_t x,
                  double lambda) {
  check_unit(lambda, "lambda");
  if (x >= r.size()) throw LookupError("anchor index " + std::to_string(x) + " out of range");
  if (!is_involutive(negation)) throw PremiseError("G-granules need an involutive negation, got " + negation.name());
  std::vector<double> m(r.size());
  for (std::size_t y = 0; y < r.size(); ++y) m[y] = gn_implication(grouping, negation, r(x, y), lambda);
  return {x, lambda, GranuleSide::grouping, FuzzySet(std::move(m))};
}

// Closure ---------------------------------------------------------------------

FuzzyRelation o_transitive_closure(const FuzzyRelation& r, const Connective& overlap, const ClosureOptions& options,
                                   Execution exec) {
  if (overlap.kind() != ConnectiveKind::overlap) throw PremiseError("closure needs an overlap");
  FuzzyRelation cur = r;
  FuzzyRelation next = r;
  for (int round = 0; round < options.max_rounds; ++round) {
    const double delta = exec == Execution::serial ? kernels::closure_step_serial(cur, overlap, next)
                                                   : kernels::closure_step_parallel(cur, overlap, next);
    std::swap(cur, next);
    if (delta < options.delta) break;
  }
  return cur;
}

}  // namespace gvpfrs
