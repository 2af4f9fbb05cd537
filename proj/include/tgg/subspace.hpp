#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tgg/linalg.hpp"

namespace tgg {

/// Subspace of GF(q)^n held by its RREF basis, so equality is data equality.
class Subspace {
 public:
  /// Linear span of the given vectors (all of length n).
  static Subspace span(FieldPtr field, std::size_t n, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  static Subspace zero(FieldPtr field, std::size_t n);
  static Subspace full(FieldPtr field, std::size_t n);
  /// Span of the standard basis vectors e_i for i in indices (0-based).
  static Subspace coordinate(FieldPtr field, std::size_t n, const std::vector<std::size_t>& indices);
  /// The hyperplane x_n = 0, i.e. the span of the first n-1 basis vectors.
  static Subspace standard_hyperplane(FieldPtr field, std::size_t n);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const FieldPtr& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in this subspace's basis; v must lie in it.
  Vector coordinates_of(std::span<const FieldElement> v) const;
  /// Sum of coords[i] * basis row i.
  Vector combine(std::span<const FieldElement> coords) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }
  /// Total order on (ambient, dim, basis entries).
  bool operator<(const Subspace& other) const;

  std::size_t hash() const;

 private:
  explicit Subspace(RrefResult reduced);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Computed as the annihilator of the stacked annihilators.
Subspace intersect(const Subspace& a, const Subspace& b);
/// dim(a + b) without building the sum.
std::size_t sum_dim(const Subspace& a, const Subspace& b);
/// dim(a ∩ b) via dim a + dim b - dim(a + b).
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// A 1-dimensional subspace, stored as its monic representative (leading
/// nonzero coordinate 1).
struct ProjectivePoint {
  Vector rep;

  /// Normalizes a nonzero vector. Throws std::invalid_argument for zero.
  static ProjectivePoint of(const Field& field, Vector v);
  bool operator==(const ProjectivePoint&) const = default;
};

bool contains(const Subspace& w, const ProjectivePoint& point);

/// Integer encoding of a vector, first coordinate most significant.
std::uint64_t encode_vector(std::span<const FieldElement> v, std::uint32_t q);
Vector decode_vector(std::uint64_t code, std::size_t n, std::uint32_t q);

/// q-binomial coefficient by the product formula. Throws
/// std::overflow_error when the value exceeds 64 bits.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);
/// (q^d - 1)/(q - 1), the number of points of a d-space.
std::uint64_t point_count(std::uint64_t d, std::uint64_t q);

/// Restartable stream of the k-dimensional subspaces of an ambient
/// subspace. Order: echelon pivot pattern (lexicographic over pivot
/// combinations), then free entries as a base-q counter with the first free
/// entry most significant. Coordinates are taken with respect to the
/// ambient's RREF basis.
class KSubspaceStream {
 public:
  KSubspaceStream(Subspace ambient, std::size_t k);

  std::optional<Subspace> next();
  void reset();

 private:
  bool advance_pattern();

  Subspace ambient_;
  std::size_t k_;
  std::size_t m_;
  std::vector<std::size_t> pattern_;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots_;
  std::vector<std::uint32_t> counter_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Subspace> enumerate_k_subspaces(const Subspace& ambient, std::size_t k);

/// [w]: the points of w, sorted by representative encoding.
std::vector<ProjectivePoint> projective_points(const Subspace& w);
/// Points of w outside the hyperplane h.
std::vector<ProjectivePoint> affine_points(const Subspace& w, const Subspace& h);

/// Index of [V] for V = GF(q)^n: points in encoding order, plus a lookup
/// from any nonzero vector to the index of the point it spans.
class PointSpace {
 public:
  PointSpace(FieldPtr field, std::size_t n);

  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dim() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& point(std::size_t i) const { return points_[i]; }

  /// Index of <v>; v nonzero. Throws std::invalid_argument for zero.
  std::uint32_t index_of(std::span<const FieldElement> v) const;
  /// Sorted indices of the points of w.
  std::vector<std::uint32_t> indices_of(const Subspace& w) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<ProjectivePoint> points_;
  std::vector<std::uint32_t> table_;  // indexed by encode_vector, only when small
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

}  // namespace tgg
