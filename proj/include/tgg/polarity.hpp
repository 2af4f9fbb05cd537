#pragma once

#include "tgg/subspace.hpp"

namespace tgg {

/// Polarity of a hyperplane H: orthogonal complement inside H under a
/// nondegenerate symmetric bilinear form. The Gram matrix is written in the
/// coordinates of H's RREF basis.
class Polarity {
 public:
  /// Identity Gram matrix.
  explicit Polarity(Subspace h);
  /// Throws std::invalid_argument if gram is not square of size dim h,
  /// not symmetric, or singular.
  Polarity(Subspace h, Matrix gram);

  const Subspace& hyperplane() const { return h_; }
  const Matrix& gram() const { return gram_; }
  /// Inverse of the Gram matrix, cached for the lift kernels.
  const Matrix& gram_inverse() const { return gram_inv_; }

  /// sigma(w) = { x in H : B(x, y) = 0 for all y in w }. Throws
  /// std::invalid_argument if w is not inside H.
  Subspace apply(const Subspace& w) const;

 private:
  Subspace h_;
  Matrix gram_;
  Matrix gram_inv_;
};

}  // namespace tgg
