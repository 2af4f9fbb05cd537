#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tgg/gf.hpp"

namespace tgg {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Builds from integer encodings; every row must have the same length.
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows,
                          std::size_t cols = 0);
  static Matrix from_vectors(FieldPtr field, const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  const std::vector<FieldElement>& data() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  /// this * v with v as a column vector.
  Vector apply(std::span<const FieldElement> v) const;
  /// Rows of this followed by rows of other.
  Matrix stacked(const Matrix& other) const;
  /// Keeps the first n rows.
  Matrix top_rows(std::size_t n) const;
  std::vector<std::vector<std::uint32_t>> to_rows() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form: leading ones, pivot columns cleared, zero rows
/// last.
RrefResult rref(const Matrix& m);

/// Rank over the matrix's field. GF(2) input goes through a bit-packed
/// elimination.
std::size_t rank(const Matrix& m);

/// Rows form an RREF basis of { x : m * x^T = 0 }.
Matrix kernel_basis(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rank of a 0/1 matrix over GF(2), rows given as packed 64-bit words.
std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols);

}  // namespace tgg
