#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tgg/drg.hpp"
#include "tgg/geometry.hpp"
#include "tgg/polarity.hpp"

namespace tgg {

/// x -> A * x^(p^frob), the Frobenius power applied coordinatewise before the
/// matrix.
class SemilinearMap {
 public:
  /// Throws std::invalid_argument for a singular or non-square matrix or
  /// frob >= f.
  SemilinearMap(Matrix matrix, std::uint32_t frob);

  static SemilinearMap identity(const FieldPtr& field, std::size_t n);
  static SemilinearMap scalar(const FieldPtr& field, std::size_t n, FieldElement c);

  const Matrix& matrix() const { return matrix_; }
  std::uint32_t frob() const { return frob_; }
  std::size_t dim() const { return matrix_.rows(); }

  Vector apply(std::span<const FieldElement> x) const;
  Subspace apply(const Subspace& w) const;

  /// Maps the hyperplane x_n = 0 onto itself (last row is (0, ..., 0, c)).
  bool stabilizes_standard_hyperplane() const;

  /// this ∘ inner.
  SemilinearMap compose(const SemilinearMap& inner) const;

  bool operator==(const SemilinearMap& other) const {
    return frob_ == other.frob_ && matrix_ == other.matrix_;
  }

 private:
  Matrix matrix_;
  std::uint32_t frob_;
};

struct PointPermutation {
  std::vector<std::uint32_t> perm;

  static PointPermutation identity(std::size_t n);
  bool is_bijection() const;
  /// (this ∘ inner)[x] = this[inner[x]].
  PointPermutation compose(const PointPermutation& inner) const;
  bool operator==(const PointPermutation&) const = default;
};

/// Uniform element of ΓL(V)_H for V = GF(q)^(2e+1) and H the standard
/// hyperplane: invertible 2e x 2e block, free last column above a nonzero
/// corner, random Frobenius power.
SemilinearMap random_stabilizer_element(const FieldPtr& field, std::size_t e, std::mt19937_64& rng);
SemilinearMap random_stabilizer_element(const FieldPtr& field, std::size_t e, std::uint64_t seed);

/// The point permutation φ': σφσ on [H], φ elsewhere. Uses the closed form
/// σφσ<x> = <G^-1 B^-T (G x)^θ> on H; requires sigma's hyperplane to be the
/// standard one. Throws std::invalid_argument if phi does not stabilize H.
PointPermutation lift(const SemilinearMap& phi, const Polarity& sigma, const PointSpace& points);

struct AutomorphismCheck {
  bool ok = false;
  std::optional<std::size_t> offending_block;  // first block whose image is not a block
  explicit operator bool() const { return ok; }
};

/// Throws std::invalid_argument if the permutation size differs from v.
AutomorphismCheck is_design_automorphism(const Design& d, const PointPermutation& p);

struct RelationCheck {
  bool holds = false;
  std::optional<std::size_t> vertex;  // first W with α f(W) != f φ(W)
  explicit operator bool() const { return holds; }
};

/// With α the block action of lift(phi), checks α(f(W)) = f(φ(W)) for every
/// vertex W of the twisted graph g, reading f from cert.
RelationCheck check_lift_relation(const Design& d, const Graph& g, const IsoCertificate& cert,
                                      const SemilinearMap& phi, const Polarity& sigma);

/// q^{2e} |GL(2e,q)| f. Throws std::overflow_error past 64 bits.
std::uint64_t stabilizer_order(std::uint64_t q, std::uint64_t e, std::uint64_t f);

struct ExhaustiveReport {
  std::uint64_t total = 0;
  std::uint64_t automorphisms = 0;
  std::uint64_t failures = 0;
  std::uint64_t distinct = 0;
  std::uint64_t identity_count = 0;
  std::vector<std::uint64_t> failure_indices;  // first few
};

using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// Lifts every element of GL(5,2)_H and checks each is a design automorphism
/// of d and that all lifts are distinct. Only (q, e) = (2, 2) is accepted.
ExhaustiveReport exhaustive_lift_check(const Design& d, const Polarity& sigma, const ProgressFn& progress = {});

/// All invertible n x n matrices over GF(2), as row bitmasks, in increasing
/// code order.
std::vector<std::vector<std::uint32_t>> gl_gf2(std::size_t n);

}  // namespace tgg
