#include "gvpfrs/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "gvpfrs/errors.hpp"
#include "kernels/kernels.hpp"

namespace gvpfrs {

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta = " + std::to_string(beta) + " is outside [0,1]");
}

void check_shapes(const FuzzyRelation& r, const FuzzySet& a) {
  if (r.size() == 0) throw DomainError("empty universe");
  if (a.size() != r.size()) {
    throw DomainError("set has " + std::to_string(a.size()) + " entries, relation is " + std::to_string(r.size()) +
                      "x" + std::to_string(r.size()));
  }
}

void check_kind(const Connective& c, ConnectiveKind kind) {
  if (c.kind() != kind) {
    throw PremiseError("expected " + std::string(to_string(kind)) + ", got " + c.name() + " (" +
                       std::string(to_string(c.kind())) + ")");
  }
}

void check_involutive(const Connective& negation) {
  check_kind(negation, ConnectiveKind::negation);
  if (!is_involutive(negation)) throw PremiseError("negation " + negation.name() + " is not involutive");
}

// Entries can leave [0,1] by an ulp for tabulated or custom connectives.
FuzzySet clamped(std::vector<double> v) {
  for (double& x : v) x = std::clamp(x, 0.0, 1.0);
  return FuzzySet(std::move(v));
}

FuzzySet select(const FuzzyRelation& r, const ResidualPair& pair, const Connective* negation, const FuzzySet& a,
                double beta, kernels::Rank rank, Witnesses* witnesses, Execution exec) {
  const auto fam = PrecisionFamily::make(beta, r.size());
  kernels::SelectionInput in{r, pair, negation, a.values(), fam.k, rank};
  std::vector<double> out(r.size());
  if (exec == Execution::serial)
    kernels::select_serial(in, out, witnesses);
  else
    kernels::select_parallel(in, out, witnesses);
  return clamped(std::move(out));
}

void check_cap(std::size_t n, std::size_t cap) {
  if (cap > max_oracle_cap) {
    throw RefusalError("oracle cap " + std::to_string(cap) + " exceeds the hard limit of " +
                       std::to_string(max_oracle_cap));
  }
  if (n > cap) {
    throw RefusalError("brute-force enumeration refused: |X| = " + std::to_string(n) + " exceeds the oracle cap of " +
                       std::to_string(cap));
  }
}

// Best (max of min, or min of max) over every subset of size >= k, by
// enumerating all bitmasks. ext[mask] is built from ext[mask minus lowest bit].
double enumerate_subsets(const std::vector<double>& scores, std::size_t k, bool largest,
                         std::vector<double>& ext) {
  const std::size_t n = scores.size();
  const std::uint32_t full = (std::uint32_t{1} << n);
  ext.resize(full);
  ext[0] = largest ? 2.0 : -1.0;
  double best = largest ? -1.0 : 2.0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const double s = scores[static_cast<std::size_t>(std::countr_zero(mask))];
    const double prev = ext[mask & (mask - 1)];
    const double v = largest ? std::min(prev, s) : std::max(prev, s);
    ext[mask] = v;
    if (static_cast<std::size_t>(std::popcount(mask)) >= k) best = largest ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

FuzzySet bruteforce_levels(const FuzzyRelation& r, const ResidualPair& pair, const Connective* negation,
                           const FuzzySet& a, double beta, std::size_t cap, bool largest) {
  check_shapes(r, a);
  check_cap(r.size(), cap);
  const auto fam = PrecisionFamily::make(beta, r.size());
  const std::size_t n = r.size();
  std::vector<double> out(n), scores(n), ext;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double rel = negation != nullptr ? (*negation)(r(x, y)) : r(x, y);
      scores[y] = pair(rel, a[y]);
    }
    out[x] = enumerate_subsets(scores, fam.k, largest, ext);
  }
  return clamped(std::move(out));
}

std::vector<std::size_t> crisp_anchors(const FuzzyRelation& r, const FuzzySet& a, double beta, bool lower_side) {
  if (!r.is_crisp()) throw DomainError("crisp operator needs a crisp relation");
  if (!a.is_crisp()) throw DomainError("crisp operator needs a crisp set");
  check_shapes(r, a);
  check_beta(beta);
  const std::size_t n = r.size();
  const auto fam = PrecisionFamily::make(beta, n);
  std::vector<std::size_t> anchors;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t count = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (r(x, y) != 1.0) continue;
      if (lower_side ? a[y] == 0.0 : a[y] == 1.0) ++count;
    }
    // count <= (1-beta)n  <=>  n - count >= beta n  <=>  n - count >= k
    if (n - count >= fam.k) anchors.push_back(x);
  }
  return anchors;
}

}  // namespace

// Precision ----------------------------------------------------------------------

std::size_t precision_threshold(double beta, std::size_t n) {
  check_beta(beta);
  if (n == 0) throw DomainError("empty universe");
  const double raw = std::ceil(beta * static_cast<double>(n) - 1e-12);
  const auto k = static_cast<std::size_t>(std::max(raw, 1.0));
  return std::min(k, n);
}

PrecisionFamily PrecisionFamily::make(double beta, std::size_t n) { return {beta, n, precision_threshold(beta, n)}; }

std::string_view to_string(Method m) { return m == Method::selection ? "selection" : "bruteforce"; }

// Selection ---------------------------------------------------------------------

FuzzySet g_vector(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                  Witnesses* witnesses, Execution exec) {
  check_shapes(r, a);
  check_kind(overlap.base(), ConnectiveKind::overlap);
  return select(r, overlap, nullptr, a, beta, kernels::Rank::largest, witnesses, exec);
}

FuzzySet h_vector(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                  const FuzzySet& a, double beta, Witnesses* witnesses, Execution exec) {
  check_shapes(r, a);
  check_kind(grouping.base(), ConnectiveKind::grouping);
  check_involutive(negation);
  return select(r, grouping, &negation, a, beta, kernels::Rank::smallest, witnesses, exec);
}

FuzzySet g_on_subset(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a,
                     const std::vector<std::size_t>& subset) {
  check_shapes(r, a);
  if (subset.empty()) throw DomainError("g on an empty subset is undefined");
  std::vector<double> out(r.size(), 1.0);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y : subset) out[x] = std::min(out[x], overlap(r(x, y), a[y]));
  return clamped(std::move(out));
}

FuzzySet h_on_subset(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                     const FuzzySet& a, const std::vector<std::size_t>& subset) {
  check_shapes(r, a);
  if (subset.empty()) throw DomainError("h on an empty subset is undefined");
  std::vector<double> out(r.size(), 0.0);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y : subset) out[x] = std::max(out[x], grouping(negation(r(x, y)), a[y]));
  return clamped(std::move(out));
}

FuzzySet granule_union(const FuzzyRelation& r, const Connective& overlap, const FuzzySet& level, Execution exec) {
  check_shapes(r, level);
  std::vector<double> out(r.size());
  if (exec == Execution::serial)
    kernels::sup_compose_serial(r, overlap, level.values(), out);
  else
    kernels::sup_compose_parallel(r, overlap, level.values(), out);
  return clamped(std::move(out));
}

FuzzySet granule_intersection(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                              const FuzzySet& level, Execution exec) {
  check_shapes(r, level);
  std::vector<double> out(r.size());
  if (exec == Execution::serial)
    kernels::inf_compose_serial(r, grouping, negation, level.values(), out);
  else
    kernels::inf_compose_parallel(r, grouping, negation, level.values(), out);
  return clamped(std::move(out));
}

ApproximationResult lower_approx(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                                 Execution exec) {
  ApproximationResult res;
  res.g = g_vector(r, overlap, a, beta, &res.witnesses_lower, exec);
  res.lower = granule_union(r, overlap.base(), res.g, exec);
  return res;
}

ApproximationResult upper_approx(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                                 const FuzzySet& a, double beta, Execution exec) {
  ApproximationResult res;
  res.h = h_vector(r, grouping, negation, a, beta, &res.witnesses_upper, exec);
  res.upper = granule_intersection(r, grouping.base(), negation, res.h, exec);
  return res;
}

ApproximationResult approximate(const FuzzyRelation& r, const Model& model, const FuzzySet& a, double beta,
                                Execution exec) {
  ApproximationResult res = lower_approx(r, model.overlap, a, beta, exec);
  ApproximationResult up = upper_approx(r, model.grouping, model.negation, a, beta, exec);
  res.upper = std::move(up.upper);
  res.h = std::move(up.h);
  res.witnesses_upper = std::move(up.witnesses_upper);
  return res;
}

FuzzySet lower(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta, Execution exec) {
  check_shapes(r, a);
  check_kind(overlap.base(), ConnectiveKind::overlap);
  const FuzzySet g = select(r, overlap, nullptr, a, beta, kernels::Rank::largest, nullptr, exec);
  return granule_union(r, overlap.base(), g, exec);
}

FuzzySet upper(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation, const FuzzySet& a,
               double beta, Execution exec) {
  const FuzzySet h = h_vector(r, grouping, negation, a, beta, nullptr, exec);
  return granule_intersection(r, grouping.base(), negation, h, exec);
}

// Brute force -------------------------------------------------------------------

FuzzySet bruteforce_g(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                      std::size_t cap) {
  check_kind(overlap.base(), ConnectiveKind::overlap);
  return bruteforce_levels(r, overlap, nullptr, a, beta, cap, true);
}

FuzzySet bruteforce_h(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                      const FuzzySet& a, double beta, std::size_t cap) {
  check_kind(grouping.base(), ConnectiveKind::grouping);
  check_involutive(negation);
  return bruteforce_levels(r, grouping, &negation, a, beta, cap, false);
}

FuzzySet bruteforce_lower(const FuzzyRelation& r, const ResidualPair& overlap, const FuzzySet& a, double beta,
                          std::size_t cap) {
  return granule_union(r, overlap.base(), bruteforce_g(r, overlap, a, beta, cap), Execution::serial);
}

FuzzySet bruteforce_upper(const FuzzyRelation& r, const ResidualPair& grouping, const Connective& negation,
                          const FuzzySet& a, double beta, std::size_t cap) {
  return granule_intersection(r, grouping.base(), negation, bruteforce_h(r, grouping, negation, a, beta, cap),
                              Execution::serial);
}

ApproximationResult bruteforce_approximate(const FuzzyRelation& r, const Model& model, const FuzzySet& a, double beta,
                                           std::size_t cap) {
  ApproximationResult res;
  res.method = Method::bruteforce;
  res.g = bruteforce_g(r, model.overlap, a, beta, cap);
  res.h = bruteforce_h(r, model.grouping, model.negation, a, beta, cap);
  res.lower = granule_union(r, model.overlap.base(), res.g, Execution::serial);
  res.upper = granule_intersection(r, model.grouping.base(), model.negation, res.h, Execution::serial);
  return res;
}

// Duality -----------------------------------------------------------------------

FuzzySet upper_via_duality(const FuzzyRelation& r, const ResidualPair& overlap, const Connective& grouping,
                           const Connective& negation, const FuzzySet& a, double beta, Execution exec) {
  check_kind(overlap.base(), ConnectiveKind::overlap);
  check_kind(grouping, ConnectiveKind::grouping);
  check_involutive(negation);
  if (!are_dual(overlap.base(), grouping, negation)) {
    throw PremiseError(grouping.name() + " is not the " + negation.name() + "-dual of " + overlap.base().name());
  }
  return complement(lower(r, overlap, complement(a, negation), beta, exec), negation);
}

bool witnesses_valid(const FuzzyRelation& r, const Connective& overlap, const FuzzySet& a, const FuzzySet& g,
                     const Witnesses& w, double beta, double slack) {
  const auto fam = PrecisionFamily::make(beta, r.size());
  if (w.size() != r.size()) return false;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (!fam.contains(w[x].size())) return false;
    for (std::size_t y : w[x]) {
      if (y >= r.size() || overlap(r(x, y), g[x]) > a[y] + slack) return false;
    }
  }
  return true;
}

// Crisp ---------------------------------------------------------------------------

std::vector<std::size_t> crisp_lower_anchors(const FuzzyRelation& r, const FuzzySet& a, double beta) {
  return crisp_anchors(r, a, beta, true);
}

std::vector<std::size_t> crisp_upper_anchors(const FuzzyRelation& r, const FuzzySet& a, double beta) {
  return crisp_anchors(r, a, beta, false);
}

FuzzySet crisp_lower(const FuzzyRelation& r, const FuzzySet& a, double beta) {
  std::vector<double> out(r.size(), 0.0);
  for (std::size_t x : crisp_lower_anchors(r, a, beta))
    for (std::size_t z = 0; z < r.size(); ++z)
      if (r(x, z) == 1.0) out[z] = 1.0;
  return FuzzySet(std::move(out));
}

FuzzySet crisp_upper(const FuzzyRelation& r, const FuzzySet& a, double beta) {
  std::vector<double> out(r.size(), 1.0);
  for (std::size_t x : crisp_upper_anchors(r, a, beta))
    for (std::size_t z = 0; z < r.size(); ++z)
      if (r(x, z) == 1.0) out[z] = 0.0;
  return FuzzySet(std::move(out));
}

FuzzySet indicator(std::size_t n, const std::vector<std::size_t>& members) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i : members) {
    if (i >= n) throw LookupError("element index " + std::to_string(i) + " out of range");
    out[i] = 1.0;
  }
  return FuzzySet(std::move(out));
}

}  // namespace gvpfrs
