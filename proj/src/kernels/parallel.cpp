#include <algorithm>

#include <omp.h>

#include "kernels.hpp"

namespace gvpfrs::kernels {

void select_parallel(const SelectionInput& in, std::span<double> out,
                     std::vector<std::vector<std::size_t>>* witnesses) {
  const auto n = static_cast<std::ptrdiff_t>(in.relation.size());
  if (witnesses != nullptr) witnesses->assign(static_cast<std::size_t>(n), {});
#pragma omp parallel
  {
    std::vector<double> scores;
    std::vector<std::size_t> order;
#pragma omp for schedule(static)
    for (std::ptrdiff_t x = 0; x < n; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      detail::score_row(in, ux, scores);
      out[ux] = detail::select_row(in, scores, order, witnesses != nullptr ? &(*witnesses)[ux] : nullptr);
    }
  }
}

void sup_compose_parallel(const FuzzyRelation& r, const Connective& overlap, std::span<const double> level,
                          std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(r.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t z = 0; z < n; ++z) {
    out[static_cast<std::size_t>(z)] = detail::sup_column(r, overlap, level, static_cast<std::size_t>(z));
  }
}

void inf_compose_parallel(const FuzzyRelation& r, const Connective& grouping, const Connective& negation,
                          std::span<const double> level, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(r.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t z = 0; z < n; ++z) {
    out[static_cast<std::size_t>(z)] =
        detail::inf_column(r, grouping, negation, level, static_cast<std::size_t>(z));
  }
}

double closure_step_parallel(const FuzzyRelation& r, const Connective& overlap, FuzzyRelation& out) {
  const auto n = static_cast<std::ptrdiff_t>(r.size());
  double delta = 0.0;
#pragma omp parallel for schedule(static) reduction(max : delta)
  for (std::ptrdiff_t x = 0; x < n; ++x) {
    delta = std::max(delta, detail::closure_row(r, overlap, out, static_cast<std::size_t>(x)));
  }
  return delta;
}

}  // namespace gvpfrs::kernels
