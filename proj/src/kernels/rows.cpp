#include <algorithm>
#include <cmath>
#include <numeric>

#include "kernels.hpp"

namespace gvpfrs::kernels::detail {

void score_row(const SelectionInput& in, std::size_t x, std::vector<double>& scores) {
  const auto row = in.relation.row(x);
  const std::size_t n = row.size();
  scores.resize(n);
  if (in.negation != nullptr) {
    const Connective& neg = *in.negation;
    for (std::size_t y = 0; y < n; ++y) scores[y] = in.residual(neg(row[y]), in.set[y]);
  } else {
    for (std::size_t y = 0; y < n; ++y) scores[y] = in.residual(row[y], in.set[y]);
  }
}

// Partial selection over an index permutation with a strict total order
// (score, then index), so the selected set is the lexicographically smallest
// among equal-score ties and the k-th value does not depend on tie order.
double select_row(const SelectionInput& in, const std::vector<double>& scores, std::vector<std::size_t>& order,
                  std::vector<std::size_t>* witness) {
  const std::size_t n = scores.size();
  order.resize(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto kth = order.begin() + static_cast<std::ptrdiff_t>(in.k - 1);
  if (in.rank == Rank::largest) {
    std::nth_element(order.begin(), kth, order.end(), [&](std::size_t a, std::size_t b) {
      return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
    });
  } else {
    std::nth_element(order.begin(), kth, order.end(), [&](std::size_t a, std::size_t b) {
      return scores[a] < scores[b] || (scores[a] == scores[b] && a < b);
    });
  }
  if (witness != nullptr) {
    witness->assign(order.begin(), kth + 1);
    std::sort(witness->begin(), witness->end());
  }
  return scores[*kth];
}

double sup_column(const FuzzyRelation& r, const Connective& overlap, std::span<const double> level, std::size_t z) {
  double best = 0.0;
  for (std::size_t x = 0; x < r.size(); ++x) best = std::max(best, overlap(r(x, z), level[x]));
  return best;
}

double inf_column(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                  std::span<const double> level, std::size_t z) {
  double best = 1.0;
  for (std::size_t x = 0; x < r.size(); ++x) best = std::min(best, grouping(negation(r(x, z)), level[x]));
  return best;
}

double closure_row(const FuzzyRelation& r, const Connective& overlap, FuzzyRelation& out, std::size_t x) {
  const std::size_t n = r.size();
  double delta = 0.0;
  for (std::size_t z = 0; z < n; ++z) {
    double v = r(x, z);
    for (std::size_t y = 0; y < n; ++y) v = std::max(v, overlap(r(x, y), r(y, z)));
    delta = std::max(delta, v - r(x, z));
    out.set(x, z, v);
  }
  return delta;
}

}  // namespace gvpfrs::kernels::detail
