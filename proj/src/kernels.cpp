#include "tgg/kernels.hpp"

#include <omp.h>

namespace tgg::kernels {

AdjacencyLists adjacency_from_predicate(std::size_t n, const PairPredicate& adjacent) {
  AdjacencyLists upper(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& row = upper[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
      if (adjacent(static_cast<std::size_t>(i), j)) row.push_back(static_cast<std::uint32_t>(j));
    }
  }
  AdjacencyLists lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : upper[i]) lists[j].push_back(static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < n; ++i) lists[i].insert(lists[i].end(), upper[i].begin(), upper[i].end());
  return lists;
}

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace tgg::kernels
