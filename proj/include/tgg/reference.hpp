#pragma once

// Serial reference implementations of the parallel kernels. They follow the
// definitions directly and are kept for cross-checking and benchmarking.

#include <map>
#include <variant>

#include "tgg/autgroup.hpp"
#include "tgg/drg.hpp"
#include "tgg/geometry.hpp"

namespace tgg::reference {

AdjacencyLists adjacency_from_predicate(std::size_t n, const PairPredicate& adjacent);

Graph block_graph(const Design& d, std::size_t threshold);

std::map<std::size_t, std::uint64_t> intersection_spectrum(const Design& d);

/// All-pairs distance table, then b/c counts for every (base, vertex) pair.
std::variant<IntersectionArray, NotDRG> intersection_array(const Graph& g);

bool check_isomorphism(const Graph& g1, const Graph& g2, const IsoCertificate& cert);

/// φ' computed through subspaces: σ(<x>) is a hyperplane of H, φ maps it,
/// σ takes it back to a point.
PointPermutation lift(const SemilinearMap& phi, const Polarity& sigma, const PointSpace& points);

/// Image of every block looked up in an ordered set of blocks.
AutomorphismCheck is_design_automorphism(const Design& d, const PointPermutation& p);

}  // namespace tgg::reference
