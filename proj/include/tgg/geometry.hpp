#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgg/kernels.hpp"
#include "tgg/polarity.hpp"
#include "tgg/subspace.hpp"

namespace tgg {

/// Where a graph vertex or design block came from.
enum class Family : std::uint8_t {
  kNone,       // no provenance (imported or hand-built)
  kA,          // twisted graph: (e+1)-space not inside H
  kB,          // twisted graph: (e-1)-space of H
  kGrassmann,  // Grassmann graph vertex
  kAPrime,     // JT block f(W), W in A
  kBPrime,     // JT block [W], W an (e+1)-space of H
  kGeometric,  // PG_e(2e,q) block [W]
};

std::string to_string(Family f);

struct Label {
  Family family = Family::kNone;
  std::optional<Subspace> subspace;
};

std::string to_string(const Label& label);

/// Simple undirected graph. Vertex order is part of the contract: exports and
/// certificates refer to vertices by index.
class Graph {
 public:
  /// Throws std::invalid_argument on self-loops, asymmetric or out-of-range
  /// adjacency. Lists are sorted on construction.
  Graph(std::vector<Label> labels, AdjacencyLists adjacency);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t u, std::size_t v) const {
    const std::size_t bit = u * adjacency_.size() + v;
    return (bits_[bit / 64] >> (bit % 64)) & 1u;
  }
  const std::vector<std::uint32_t>& neighbors(std::size_t u) const { return adjacency_[u]; }
  const AdjacencyLists& adjacency() const { return adjacency_; }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t u) const { return labels_[u]; }

  /// The common degree, or nullopt if the graph is not regular.
  std::optional<std::size_t> regular_degree() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  bool same_adjacency(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<Label> labels_;
  AdjacencyLists adjacency_;
  std::vector<std::uint64_t> bits_;
};

/// Sorted point indices.
using Block = std::vector<std::uint32_t>;

struct DesignParameters {
  std::uint64_t v = 0;
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  bool operator==(const DesignParameters&) const = default;
};

/// Incidence structure on points 0..v-1.
class Design {
 public:
  /// Blocks are sorted; duplicate points inside a block or out-of-range
  /// indices throw std::invalid_argument. labels may be empty.
  Design(std::size_t v, std::vector<Block> blocks, std::vector<Label> labels = {},
         std::shared_ptr<const PointSpace> points = nullptr);

  std::size_t point_count() const { return v_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<Label>& labels() const { return labels_; }
  /// Geometric meaning of the point indices, when the design has one.
  const std::shared_ptr<const PointSpace>& points() const { return points_; }

  /// First pair (i, j), i < j, of identical blocks.
  std::optional<std::pair<std::size_t, std::size_t>> repeated_block() const;
  /// Index of the block equal to the given point set, if any.
  std::optional<std::size_t> find_block(const Block& b) const;

 private:
  std::size_t v_;
  std::vector<Block> blocks_;
  std::vector<Label> labels_;
  std::shared_ptr<const PointSpace> points_;
  std::map<Block, std::size_t> lookup_;
};

std::size_t intersection_size(const Block& a, const Block& b);

/// J_q(n, k): k-subspaces of GF(q)^n, adjacent when they meet in dimension
/// k - 1. Requires 1 <= k <= n - 1.
Graph grassmann_graph(const FieldPtr& field, std::size_t n, std::size_t k);

/// (e+1)-subspaces of GF(q)^(2e+1) not inside h, in enumeration order.
std::vector<Subspace> twisted_family_a(const FieldPtr& field, std::size_t e, const Subspace& h);
/// (e-1)-subspaces of h, in enumeration order.
std::vector<Subspace> twisted_family_b(std::size_t e, const Subspace& h);

/// Three-case adjacency of the twisted Grassmann graph on labelled vertices.
bool twisted_adjacent(const Label& x, const Label& y, std::size_t e);

/// Twisted Grassmann graph on A then B. Requires e >= 2 and h a hyperplane
/// of GF(q)^(2e+1).
Graph twisted_grassmann(const FieldPtr& field, std::size_t e, const Subspace& h);

/// PG_e(2e, q): points of GF(q)^(2e+1), one block per (e+1)-subspace.
/// e >= 1.
Design pg_design(const FieldPtr& field, std::size_t e);

/// The block f(w): [sigma(w ∩ H)] ∪ (w \ H) for w in A, [sigma(w)] for w in
/// B. Throws std::invalid_argument if w is in neither family.
Block f_map(const Subspace& w, const Polarity& sigma, const PointSpace& points);

/// JT design: blocks f(W) for W in A (labelled kAPrime with source W), then
/// [W] for the (e+1)-subspaces W of H (kBPrime). e >= 2.
Design jt_design(const FieldPtr& field, std::size_t e, const Polarity& sigma);

/// Blocks adjacent iff they share exactly `threshold` points.
Graph block_graph(const Design& d, std::size_t threshold);

/// Multiset of |B1 ∩ B2| over unordered pairs of distinct blocks, as
/// size -> count.
std::map<std::size_t, std::uint64_t> intersection_spectrum(const Design& d);

}  // namespace tgg
