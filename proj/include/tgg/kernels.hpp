#pragma once

#include <cstdint>
#include <functional>
#include <vector>

// Data-parallel building blocks shared by the constructions and checkers.
// Each has a serial counterpart in tgg/reference.hpp with identical output.

namespace tgg {

using AdjacencyLists = std::vector<std::vector<std::uint32_t>>;
using PairPredicate = std::function<bool(std::size_t, std::size_t)>;

namespace kernels {

/// Sorted neighbor lists of the graph on n vertices where i ~ j iff
/// adjacent(i, j) for i < j. Rows are split across OpenMP threads.
AdjacencyLists adjacency_from_predicate(std::size_t n, const PairPredicate& adjacent);

/// Number of OpenMP threads the kernels will use.
int thread_count();
/// Overrides the OpenMP thread count (n <= 0 leaves the default).
void set_thread_count(int n);

}  // namespace kernels
}  // namespace tgg
