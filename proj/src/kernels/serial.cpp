#include <algorithm>

#include "kernels.hpp"

namespace gvpfrs::kernels {

void select_serial(const SelectionInput& in, std::span<double> out, std::vector<std::vector<std::size_t>>* witnesses) {
  const std::size_t n = in.relation.size();
  if (witnesses != nullptr) witnesses->assign(n, {});
  std::vector<double> scores;
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < n; ++x) {
    detail::score_row(in, x, scores);
    out[x] = detail::select_row(in, scores, order, witnesses != nullptr ? &(*witnesses)[x] : nullptr);
  }
}

void sup_compose_serial(const FuzzyRelation& r, const Connective& overlap, std::span<const double> level,
                        std::span<double> out) {
  for (std::size_t z = 0; z < r.size(); ++z) out[z] = detail::sup_column(r, overlap, level, z);
}

void inf_compose_serial(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                        std::span<const double> level, std::span<double> out) {
  for (std::size_t z = 0; z < r.size(); ++z) out[z] = detail::inf_column(r, grouping, negation, level, z);
}

double closure_step_serial(const FuzzyRelation& r, const Connective& overlap, FuzzyRelation& out) {
  double delta = 0.0;
  for (std::size_t x = 0; x < r.size(); ++x) delta = std::max(delta, detail::closure_row(r, overlap, out, x));
  return delta;
}

}  // namespace gvpfrs::kernels
