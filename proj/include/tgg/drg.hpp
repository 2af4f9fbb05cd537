#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tgg/geometry.hpp"

namespace tgg {

/// {b_0, ..., b_{d-1}; c_1, ..., c_d}.
struct IntersectionArray {
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> c;
  std::size_t diameter = 0;

  /// k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}.
  std::vector<std::uint64_t> class_sizes() const;
  bool operator==(const IntersectionArray&) const = default;
};

std::string to_string(const IntersectionArray& a);

/// Witness that a connected regular graph is not distance-regular: vertex u
/// at distance i from base v has a b- or c-count differing from the
/// reference taken at base vertex 0.
struct NotDRG {
  std::size_t base = 0;
  std::size_t vertex = 0;
  std::size_t distance = 0;
  std::string base_label;
  std::string vertex_label;
  std::string reason;
};

/// Raised for graphs the distance-regularity check does not apply to.
class GraphStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// BFS from every base vertex, in parallel. Violations resolve to the
/// lexicographically smallest (base, vertex). Throws GraphStructureError for
/// empty, disconnected or irregular graphs.
std::variant<IntersectionArray, NotDRG> intersection_array(const Graph& g);

/// Grassmann J_q(n,k) parameters b_j = q^{2j+1}[k-j][n-k-j], c_j = [j]^2,
/// with k replaced by min(k, n-k).
IntersectionArray grassmann_intersection_array(std::uint64_t n, std::uint64_t k, std::uint64_t q);

struct IsoCertificate {
  std::vector<std::uint32_t> mapping;  // source vertex -> target vertex
  std::string source;
  std::string target;
};

/// True iff cert.mapping is a bijection and u ~ v in g1 exactly when
/// mapping[u] ~ mapping[v] in g2. Throws std::invalid_argument on a size
/// mismatch.
bool check_isomorphism(const Graph& g1, const Graph& g2, const IsoCertificate& cert);

/// The certificate W -> f(W) from the twisted graph's vertices to the JT
/// design's blocks (indices into jt.blocks()).
IsoCertificate f_certificate(const Graph& twisted, const Design& jt, const Polarity& sigma);

struct NotDesign {
  std::string reason;
};

/// Verifies constant block size, replication and pair-count. Throws
/// std::invalid_argument for a design without blocks.
std::variant<DesignParameters, NotDesign> check_2design(const Design& d);

/// Rank over GF(p) of the b x v incidence matrix.
std::size_t p_rank(const Design& d, std::uint32_t p);

/// Result of checking W1 ~ W2 <=> |f(W1) ∩ f(W2)| = (q^e-1)/(q-1).
struct EquivalenceReport {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // first few
};

/// Checks the equivalence on every unordered pair of the given twisted
/// vertex labels; blocks[i] must be f(labels[i]).
EquivalenceReport equivalence_all_pairs(const std::vector<Label>& labels, const std::vector<Block>& blocks,
                                        std::size_t e, std::uint32_t q);
/// Same on `samples` random pairs drawn with the given seed.
EquivalenceReport equivalence_sampled(const std::vector<Label>& labels, const std::vector<Block>& blocks,
                                      std::size_t e, std::uint32_t q, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace tgg
