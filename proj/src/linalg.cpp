#include "tgg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgg {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement{1};
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows,
                         std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field->element(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_vectors(FieldPtr field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("vector length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  const Field& F = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = F.add(out(r, c), F.mul(a, rhs(k, c)));
    }
  }
  return out;
}

Vector Matrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  const Field& F = *field_;
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldElement acc{};
    for (std::size_t c = 0; c < cols_; ++c) acc = F.add(acc, F.mul((*this)(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (cols_ != other.cols_) throw std::invalid_argument("stacking matrices of different width");
  Matrix out(field_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::top_rows(std::size_t n) const {
  Matrix out(field_, n, cols_);
  std::copy_n(data_.begin(), n * cols_, out.data_.begin());
  return out;
}

std::vector<std::vector<std::uint32_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).value;
  return out;
}

RrefResult rref(const Matrix& m) {
  const Field& F = *m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(row).begin());

    const FieldElement scale = F.inv(a(row, col));
    for (auto& x : a.row(row)) x = F.mul(x, scale);

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const FieldElement factor = a(r, col);
      if (factor.is_zero()) continue;
      const FieldElement neg = F.neg(factor);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = F.add(a(r, c), F.mul(neg, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t sel = rank;
    while (sel < rows.size() && !(rows[sel][word] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][word] & bit) {
        for (std::size_t w = word; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const Matrix& m) {
  if (m.field()->order() == 2) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> packed(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c).value) packed[r][c / 64] |= std::uint64_t{1} << (c % 64);
    return rank_gf2(std::move(packed), m.cols());
  }
  return rref(m).rank;
}

Matrix kernel_basis(const Matrix& m) {
  const Field& F = *m.field();
  const auto [form, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  // One vector per free column, then re-reduced into canonical form.
  Matrix basis(m.field(), m.cols() - rk, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = F.one();
    for (std::size_t r = 0; r < rk; ++r) basis(out, pivots[r]) = F.neg(form(r, free));
    ++out;
  }
  return rref(basis).form;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = FieldElement{1};
  }
  auto reduced = rref(aug);
  if (reduced.rank < n || reduced.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced.form(r, n + c);
  return inv;
}

}  // namespace tgg
