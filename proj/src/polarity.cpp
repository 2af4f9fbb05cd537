#include "tgg/polarity.hpp"

#include <stdexcept>

namespace tgg {

Polarity::Polarity(Subspace h) : Polarity(h, Matrix::identity(h.field(), h.dim())) {}

Polarity::Polarity(Subspace h, Matrix gram) : h_(std::move(h)), gram_(std::move(gram)), gram_inv_(gram_) {
  const std::size_t d = h_.dim();
  if (gram_.rows() != d || gram_.cols() != d) {
    throw std::invalid_argument("gram matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  if (!gram_.field()->same_as(*h_.field())) throw std::invalid_argument("gram matrix over the wrong field");
  if (gram_ != gram_.transpose()) throw std::invalid_argument("gram matrix is not symmetric");
  auto inv = inverse(gram_);
  if (!inv) throw std::invalid_argument("gram matrix is degenerate");
  gram_inv_ = std::move(*inv);
}

Subspace Polarity::apply(const Subspace& w) const {
  if (!h_.contains(w)) throw std::invalid_argument("polarity applied to a subspace not inside H");
  Matrix coords(h_.field(), w.dim(), h_.dim());
  for (std::size_t r = 0; r < w.dim(); ++r) {
    const Vector c = h_.coordinates_of(w.basis().row(r));
    std::copy(c.begin(), c.end(), coords.row(r).begin());
  }
  const Matrix perp = kernel_basis(coords * gram_);
  std::vector<Vector> vectors;
  vectors.reserve(perp.rows());
  for (std::size_t r = 0; r < perp.rows(); ++r) vectors.push_back(h_.combine(perp.row(r)));
  return Subspace::span(h_.field(), h_.ambient_dim(), vectors);
}

}  // namespace tgg
